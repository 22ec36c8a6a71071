"""Builders for the catalog of structure families and their closed forms.

Complex families (six real dimensions unless noted):

  nilpotent6     dw3 = rho w12 + (1-eps)A w1~1 + B w1~2 + C w2~1 + (1-eps)D w2~2,
                 dw2 = eps w1~1                             (eps, rho in {0,1})
  nonnilpotent6  dw2 = w13 + w1~3, dw3 = i eps w1~1 +- i (w1~2 - w2~1)
  reduced6       nilpotent6 with eps=0, A=1, C=0, D=x+iy
  jt             reduced6 with rho=1, B=1, D=1/t             (t != 0)
  iwasawa        nilpotent6 with rho=1, everything else 0
  family8        n=4: dw4 = A w1~1 - w2~2 - w3~3             (A = p+iq)
  abelian        n arbitrary, all differentials zero

closed_form_scalars returns the independent hand-derived obstruction
scalars that the engine is tested against; classify_reduced6 names the
underlying real nilpotent Lie algebra for the reduced family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from .errors import BadParams, UnknownFamily
from .forms import Form, conj_rank, holo_rank
from .hermitian import Metric
from .linalg import mat_det
from .scalars import I, ONE, ZERO, ComplexRational, cr
from .structures import (
    RealLieAlgebra,
    StructureEquations,
    complex_structure_from_coframe,
)


def _mon(*ranks) -> tuple:
    return tuple(ranks)


def _w(j: int) -> int:
    return holo_rank(j)


def _cw(j: int) -> int:
    return conj_rank(j)


@dataclass(frozen=True)
class Nilpotent6Params:
    eps: int
    rho: int
    A: ComplexRational
    B: ComplexRational
    C: ComplexRational
    D: ComplexRational

    def __post_init__(self):
        if self.eps not in (0, 1) or self.rho not in (0, 1):
            raise BadParams("eps and rho must be 0 or 1")


@dataclass(frozen=True)
class Reduced6Params:
    rho: int
    B: ComplexRational
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if self.rho not in (0, 1):
            raise BadParams("rho must be 0 or 1")

    def as_nilpotent6(self) -> Nilpotent6Params:
        return Nilpotent6Params(
            eps=0,
            rho=self.rho,
            A=ONE,
            B=cr(self.B),
            C=ZERO,
            D=ComplexRational(self.x, self.y),
        )


def nilpotent6(eps: int, rho: int, A, B, C, D) -> StructureEquations:
    params = Nilpotent6Params(eps, rho, cr(A), cr(B), cr(C), cr(D))
    dw2 = Form(2, {_mon(_w(1), _cw(1)): cr(params.eps)}) if params.eps else Form.zero()
    one_minus_eps = cr(1 - params.eps)
    terms = {
        _mon(_w(1), _w(2)): cr(params.rho),
        _mon(_w(1), _cw(1)): one_minus_eps * params.A,
        _mon(_w(1), _cw(2)): params.B,
        _mon(_cw(1), _w(2)): -params.C,  # C w2^~w1 = -C (~w1^w2) canonically
        _mon(_w(2), _cw(2)): one_minus_eps * params.D,
    }
    dw3 = Form(2, {m: c for m, c in terms.items() if c})
    return StructureEquations(3, [Form.zero(), dw2, dw3])


def nonnilpotent6(eps: int, sign: int) -> StructureEquations:
    if eps not in (0, 1) or sign not in (1, -1):
        raise BadParams("eps in {0,1}, sign in {+1,-1}")
    dw2 = Form(
        2, {_mon(_w(1), _w(3)): ONE, _mon(_w(1), _cw(3)): ONE}
    )
    s = cr(sign) * I
    dw3 = Form(
        2,
        {
            _mon(_w(1), _cw(1)): I * cr(eps),
            _mon(_w(1), _cw(2)): s,
            # - sign * i * w2^~w1 = + sign * i * (~w1 ^ w2) in canonical order
            _mon(_cw(1), _w(2)): s,
        },
    )
    return StructureEquations(3, [Form.zero(), dw2, dw3])


def reduced6(rho: int, B, x, y) -> StructureEquations:
    params = Reduced6Params(rho, cr(B), Fraction(x), Fraction(y))
    p = params.as_nilpotent6()
    return nilpotent6(p.eps, p.rho, p.A, p.B, p.C, p.D)


def jt(t) -> StructureEquations:
    t = Fraction(t)
    if t == 0:
        raise BadParams("t must be nonzero")
    return reduced6(rho=1, B=1, x=Fraction(1, 1) / t, y=0)


def iwasawa() -> StructureEquations:
    return nilpotent6(eps=0, rho=1, A=0, B=0, C=0, D=0)


def family8(p, q) -> StructureEquations:
    A = ComplexRational(Fraction(p), Fraction(q))
    dw4 = Form(
        2,
        {
            _mon(_w(1), _cw(1)): A,
            _mon(_w(2), _cw(2)): -ONE,
            _mon(_w(3), _cw(3)): -ONE,
        },
    )
    return StructureEquations(4, [Form.zero(), Form.zero(), Form.zero(), dw4])


def abelian(n: int) -> StructureEquations:
    return StructureEquations(n, [Form.zero()] * n)


_FAMILIES = {
    "nilpotent6": {
        "builder": nilpotent6,
        "params": {"eps": "0|1", "rho": "0|1", "A": "complex", "B": "complex",
                   "C": "complex", "D": "complex"},
        "doc": "six-dimensional nilpotent family (reduced triangular coframe)",
    },
    "nonnilpotent6": {
        "builder": nonnilpotent6,
        "params": {"eps": "0|1", "sign": "1|-1"},
        "doc": "six-dimensional non-nilpotent family (two sign choices)",
    },
    "reduced6": {
        "builder": reduced6,
        "params": {"rho": "0|1", "B": "complex", "x": "rational", "y": "rational"},
        "doc": "reduced nilpotent family with A=1, C=0, D=x+iy",
    },
    "jt": {
        "builder": jt,
        "params": {"t": "nonzero rational"},
        "doc": "one-parameter deformation dw3 = w12 + w1~1 + w1~2 + (1/t) w2~2",
    },
    "iwasawa": {
        "builder": iwasawa,
        "params": {},
        "doc": "bi-invariant structure dw3 = w12",
    },
    "family8": {
        "builder": family8,
        "params": {"p": "rational", "q": "rational"},
        "doc": "eight-dimensional family dw4 = (p+iq) w1~1 - w2~2 - w3~3",
    },
    "abelian": {
        "builder": abelian,
        "params": {"n": "int"},
        "doc": "abelian algebra, all differentials zero",
    },
}


def list_families() -> Dict[str, dict]:
    return {
        name: {"params": spec["params"], "doc": spec["doc"]}
        for name, spec in _FAMILIES.items()
    }


def build(name: str, **params) -> StructureEquations:
    spec = _FAMILIES.get(name)
    if spec is None:
        raise UnknownFamily(f"unknown family {name!r}; see list_families()")
    try:
        return spec["builder"](**params)
    except TypeError as exc:
        raise BadParams(str(exc)) from None


# ---------------------------------------------------------------------------
# the reduced-family classifier
# ---------------------------------------------------------------------------


def classify_reduced6(params: Reduced6Params) -> str:
    """Name of the real nilpotent Lie algebra underlying a reduced6 point.

    Exact case analysis on (rho, |B|^2, x, y); boundary equalities decide by
    equality, never tolerance.
    """
    rho = params.rho
    b2 = params.B.re**2 + params.B.im**2  # |B|^2, rational
    x, y = params.x, params.y
    if b2 == rho:  # |B| = rho since both sides are 0 or 1
        if y != 0:
            return "h2"
        if rho == 0 and x != 0:
            return "h3"
        if rho == 1 and x != 0:
            return "h4"
        if rho == 1:
            return "h6"
        return "h8"
    lhs = 4 * y**2
    rhs = (rho - b2) * (4 * x + rho - b2)
    if lhs > rhs:
        return "h2"
    if lhs == rhs:
        return "h4"
    return "h5"


_H_ALGEBRAS = {
    # structure constants as lists of (target, [(coef, i, j), ...])
    "h2": {5: [(1, 1, 2)], 6: [(1, 3, 4)]},
    "h3": {6: [(1, 1, 2), (1, 3, 4)]},
    "h4": {5: [(1, 1, 2)], 6: [(1, 1, 4), (1, 2, 3)]},
    "h5": {5: [(1, 1, 3), (1, 4, 2)], 6: [(1, 1, 4), (1, 2, 3)]},
    "h6": {5: [(1, 1, 2)], 6: [(1, 1, 3)]},
    "h8": {6: [(1, 1, 2)]},
}


def real_nilpotent6(label: str) -> RealLieAlgebra:
    """The real six-dimensional algebras underlying the reduced family."""
    spec = _H_ALGEBRAS.get(label)
    if spec is None:
        raise UnknownFamily(f"unknown algebra label {label!r}")
    d_of = []
    for j in range(1, 7):
        df = Form.zero()
        for coef, a, b in spec.get(j, []):
            df = df + Form.monomial((a, b), cr(coef))
        d_of.append(df)
    return RealLieAlgebra(6, d_of)


def jt_real(t) -> RealLieAlgebra:
    """Real presentation of the jt family: the h4 coframe with J_t.

    The (1,0)-coframe is w1 = e1 + i e4, w2 = e2 + i t (e3 - e4),
    w3 = 2(e5 - i e6) over de5 = e12, de6 = e14 + e23.
    """
    t = Fraction(t)
    if t == 0:
        raise BadParams("t must be nonzero")
    alg_d = [Form.zero()] * 4 + [
        Form(2, {_mon(1, 2): ONE}),
        Form(2, {_mon(1, 4): ONE, _mon(2, 3): ONE}),
    ]
    it = ComplexRational(0, t)
    rows = [
        [ONE, ZERO, ZERO, I, ZERO, ZERO],
        [ZERO, ONE, it, -it, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO, cr(2), ComplexRational(0, -2)],
    ]
    J = complex_structure_from_coframe(rows, 6)
    return RealLieAlgebra(6, alg_d, J=J)


def jt_coframe(t) -> list:
    t = Fraction(t)
    it = ComplexRational(0, t)
    return [
        [ONE, ZERO, ZERO, I, ZERO, ZERO],
        [ZERO, ONE, it, -it, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO, cr(2), ComplexRational(0, -2)],
    ]


# ---------------------------------------------------------------------------
# odd-dimensional contact entries for the circle-bundle construction
# ---------------------------------------------------------------------------


def solvable5_contact(F: Optional[Form] = None):
    """The five-dimensional solvable entry with its invariant contact data.

    de2 = e13, de3 = -e12, de5 = e14 + e23; phi sends e1 -> e4, e2 -> -e3,
    eta = e5, g the standard metric.  The default curvature is 2e14 - 2e23.
    """
    from .sasakian import ContactData

    d_of = [
        Form.zero(),
        Form(2, {_mon(1, 3): ONE}),
        Form(2, {_mon(1, 2): -ONE}),
        Form.zero(),
        Form(2, {_mon(1, 4): ONE, _mon(2, 3): ONE}),
    ]
    algebra = RealLieAlgebra(5, d_of)
    phi = [[ZERO] * 5 for _ in range(5)]
    phi[3][0] = ONE   # phi(e1) = e4
    phi[2][1] = -ONE  # phi(e2) = -e3
    phi[1][2] = ONE   # phi(e3) = e2
    phi[0][3] = -ONE  # phi(e4) = -e1
    eta = Form(1, {(5,): ONE})
    xi = [ZERO, ZERO, ZERO, ZERO, ONE]
    Phi = Form(2, {_mon(1, 4): ONE, _mon(2, 3): -ONE})
    if F is None:
        F = Form(2, {_mon(1, 4): cr(2), _mon(2, 3): cr(-2)})
    return ContactData(algebra, eta, xi, phi, Phi, F)


def heisenberg5_contact(F: Optional[Form] = None):
    """The five-dimensional Heisenberg entry: d(eta) equals the fundamental
    form, so this is the Sasakian model; default curvature is zero."""
    from .sasakian import ContactData

    d_of = [Form.zero()] * 4 + [Form(2, {_mon(1, 2): ONE, _mon(3, 4): ONE})]
    algebra = RealLieAlgebra(5, d_of)
    phi = [[ZERO] * 5 for _ in range(5)]
    phi[1][0] = ONE   # phi(e1) = e2
    phi[0][1] = -ONE
    phi[3][2] = ONE   # phi(e3) = e4
    phi[2][3] = -ONE
    eta = Form(1, {(5,): ONE})
    xi = [ZERO, ZERO, ZERO, ZERO, ONE]
    Phi = Form(2, {_mon(1, 2): ONE, _mon(3, 4): ONE})
    if F is None:
        F = Form.zero()
    return ContactData(algebra, eta, xi, phi, Phi, F)


def broken5_contact():
    """Contact data passing every form-level check but failing normality:
    the bundle extension over it is not integrable."""
    from .sasakian import ContactData

    d_of = [Form.zero()] * 4 + [Form(2, {_mon(1, 3): ONE})]
    algebra = RealLieAlgebra(5, d_of)
    phi = [[ZERO] * 5 for _ in range(5)]
    phi[1][0] = ONE
    phi[0][1] = -ONE
    phi[3][2] = ONE
    phi[2][3] = -ONE
    eta = Form(1, {(5,): ONE})
    xi = [ZERO, ZERO, ZERO, ZERO, ONE]
    Phi = Form(2, {_mon(1, 2): ONE, _mon(3, 4): ONE})
    F = Form(2, {_mon(1, 2): ONE})
    return ContactData(algebra, eta, xi, phi, Phi, F)


# ---------------------------------------------------------------------------
# closed-form obstruction scalars (independent oracles)
# ---------------------------------------------------------------------------


def skt_scalar_nilpotent6(params: Nilpotent6Params) -> Fraction:
    """K with ddbar(Omega) = x_{33} K w1^~w1^w2^~w2 for every metric."""
    b2 = params.B.re**2 + params.B.im**2
    c2 = params.C.re**2 + params.C.im**2
    re_ad = params.A.re * params.D.re + params.A.im * params.D.im  # Re(A conj(D))
    return params.rho + b2 + c2 - 2 * (1 - params.eps) * re_ad


def gamma1_nilpotent6(params: Nilpotent6Params, metric: Metric) -> Fraction:
    """Exact prediction of the k=1 scalar: mu3^2 K / (12 det(-iX))."""
    mu3 = (-I * metric.x[2][2]).real_part()
    return mu3**2 * skt_scalar_nilpotent6(params) / (12 * metric.det_minus_i_x())


def gamma1_nonnilpotent6(metric: Metric) -> Fraction:
    """Exact prediction (mu2^2 + mu3^2) / (6 det(-iX)); always positive."""
    mu2 = (-I * metric.x[1][1]).real_part()
    mu3 = (-I * metric.x[2][2]).real_part()
    return (mu2**2 + mu3**2) / (6 * metric.det_minus_i_x())


def _principal_det(metric: Metric, rows) -> ComplexRational:
    sub = [[metric.x[a - 1][b - 1] for b in rows] for a in rows]
    return mat_det(sub)


def gauduchon_obstruction_family8(p, q, metric: Metric) -> Fraction:
    """The bracket scalar whose vanishing is the k=1 (and k=2) condition.

    V = 2p (x22 x44 + x33 x44 + |x24|^2 + |x34|^2) - 2 (x11 x44 + |x14|^2);
    the engine form ddbar(Omega) ^ Omega^2 equals x44 V times the top
    monomial (through 2 x44 [bracket] with bracket real).
    """
    x = metric.x

    def group(j: int) -> ComplexRational:
        return x[j][j] * x[3][3] + x[j][3] * x[j][3].conjugate()

    A_plus_conj = cr(2 * Fraction(p))
    val = A_plus_conj * (group(1) + group(2)) - cr(2) * group(0)
    return val.real_part()


def gamma1_family8(p, q, metric: Metric) -> Fraction:
    """Exact k=1 scalar prediction: -mu4 V / (24 det(-iX))."""
    mu4 = (-I * metric.x[3][3]).real_part()
    v = gauduchon_obstruction_family8(p, q, metric)
    return -(mu4 * v) / (24 * metric.det_minus_i_x())


def balanced_obstruction_family8(p, q, metric: Metric) -> dict:
    """Balanced holds iff q = 0 and p*c0 = c1 + c2 with the positive minors
    c0 = i det X_{234}, c1 = i det X_{124}, c2 = i det X_{134}."""
    c0 = (I * _principal_det(metric, (2, 3, 4))).real_part()
    c1 = (I * _principal_det(metric, (1, 2, 4))).real_part()
    c2 = (I * _principal_det(metric, (1, 3, 4))).real_part()
    defect = Fraction(p) * c0 - c1 - c2
    return {
        "q": Fraction(q),
        "defect": defect,
        "holds": Fraction(q) == 0 and defect == 0,
    }


def closed_form_scalars(family: str, params, metric: Optional[Metric] = None) -> dict:
    """The paper-level closed forms used as oracles against the engine."""
    if family == "nilpotent6":
        out = {"K": skt_scalar_nilpotent6(params)}
        if metric is not None:
            out["gamma1"] = gamma1_nilpotent6(params, metric)
        return out
    if family == "reduced6":
        return closed_form_scalars("nilpotent6", params.as_nilpotent6(), metric)
    if family == "jt":
        t = Fraction(params)
        red = Reduced6Params(rho=1, B=ONE, x=Fraction(1) / t, y=Fraction(0))
        out = closed_form_scalars("reduced6", red, metric)
        assert out["K"] == 2 - 2 / t
        return out
    if family == "nonnilpotent6":
        if metric is None:
            raise BadParams("nonnilpotent6 closed form needs a metric")
        return {"gamma1": gamma1_nonnilpotent6(metric)}
    if family == "family8":
        p, q = params
        if metric is None:
            raise BadParams("family8 closed forms need a metric")
        return {
            "gauduchon1": gauduchon_obstruction_family8(p, q, metric),
            "gamma1": gamma1_family8(p, q, metric),
            "balanced": balanced_obstruction_family8(p, q, metric),
        }
    raise UnknownFamily(f"no closed forms for family {family!r}")
