"""Products of Sasakian-type structures and S^1-bundle extensions.

The product layer is formula-level: for factors of real dimension 2n1+1 and
2n2+1 carrying the two-parameter complex structure (a, b) and the metric
family Omega = Phi1 + Phi2 + t eta1 ^ eta2, the degree-(n-2) wedge collapses
to the single coefficient

    C(n,s) = C(n-3,s) + 2a C(n-3,s-1) + (a^2+b^2) C(n-3,s-2),

and the first-Gauduchon condition to C(n,n2) = 0, equivalently
Q = n1(n1-1) + 2a n1 n2 + (a^2+b^2) n2(n2-1) = 0.

The bundle layer is fully constructive: odd-dimensional invariant contact
data (phi, xi, eta, g, Phi) plus a closed phi-invariant curvature 2-form F
extends to a 2n-dimensional algebra with d(theta) = F, the complex
structure acting as phi on ker(eta) ∩ ker(theta) with J xi = -T, J T = xi,
and the metric h = g + theta ⊗ theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .errors import BadDimensions, BadRange, NotQuasiSasakian
from .forms import Form, wedge
from .hermitian import Metric, metric_from_form
from .scalars import I, ONE, ZERO, ComplexRational, cr
from .structures import ComplexFrame, RealLieAlgebra, complex_frame_from_real


def _binom(m: int, k: int) -> int:
    if k < 0 or k > m or m < 0:
        return 0
    out = 1
    for t in range(k):
        out = out * (m - t) // (t + 1)
    return out


def coefficient_C(n: int, s: int, a, b) -> Fraction:
    """The collapsed wedge coefficient for 0 <= s <= n-1, n >= 4."""
    return coefficient_C_sq(n, s, a, Fraction(b) ** 2)


def coefficient_C_sq(n: int, s: int, a, b_squared) -> Fraction:
    """coefficient_C with b entering only through b^2 (which may be any
    positive rational, covering irrational b with rational square)."""
    if n < 4:
        raise BadRange("coefficient table needs n >= 4")
    if not 0 <= s <= n - 1:
        raise BadRange(f"s must be in 0..{n - 1}")
    a = Fraction(a)
    m = Fraction(a * a) + Fraction(b_squared)
    return (
        Fraction(_binom(n - 3, s))
        + 2 * a * _binom(n - 3, s - 1)
        + m * _binom(n - 3, s - 2)
    )


def cns_table(n: int, a, b) -> list:
    """All collapsed coefficients C(n, s) for s = 0..n-1.

    The boundary entries satisfy C(n,0) = 1 and C(n,n-1) = a^2 + b^2.
    """
    values = [coefficient_C(n, s, a, b) for s in range(n)]
    assert values[0] == 1
    assert values[-1] == Fraction(a) ** 2 + Fraction(b) ** 2
    return values


def product_obstruction(n1: int, n2: int, a, b_squared) -> Fraction:
    """Q = n1(n1-1) + 2a n1 n2 + (a^2+b^2) n2(n2-1); zero iff 1st Gauduchon."""
    a = Fraction(a)
    m = a * a + Fraction(b_squared)
    return Fraction(n1 * (n1 - 1)) + 2 * a * n1 * n2 + m * n2 * (n2 - 1)


@dataclass(frozen=True)
class ProductParams:
    n1: int
    n2: int
    a: Fraction
    b: Fraction
    t: Fraction

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise BadDimensions("factor parameters must be positive integers")
        if self.b == 0:
            raise BadDimensions("b must be nonzero")
        if self.t / self.b <= 0:
            raise BadDimensions("need t/b > 0 for a positive metric")


@dataclass
class ProductReport:
    n: int
    obstruction: Optional[Fraction]  # Q, for n > 3
    first_gauduchon: Optional[bool]
    astheno: Optional[bool]
    ratio: Optional[Fraction]  # the Omega^n proportionality factor, n > 3
    gamma1: Optional[Fraction]  # the n = 3 scalar a t / (3 b)
    skt: Optional[bool]


def product_report(params: ProductParams) -> ProductReport:
    """Gauduchon data for the product metric Phi1 + Phi2 + t eta1 ^ eta2."""
    n = params.n1 + params.n2 + 1
    a, b, t = params.a, params.b, params.t
    if n == 3:
        gamma1 = a * t / (3 * b)
        return ProductReport(
            n=n,
            obstruction=None,
            first_gauduchon=(a == 0),
            astheno=(a == 0),  # astheno and SKT coincide for n = 3
            ratio=None,
            gamma1=gamma1,
            skt=(a == 0),
        )
    q = product_obstruction(params.n1, params.n2, a, b * b)
    denom = Fraction(
        params.n1 * (params.n1 - 1)
        + 2 * params.n1 * params.n2
        + params.n2 * (params.n2 - 1)
    )
    ratio = Fraction(n - 2) * t / (n * b) * (q / denom)
    return ProductReport(
        n=n,
        obstruction=q,
        first_gauduchon=(q == 0),
        astheno=(q == 0),
        ratio=ratio,
        gamma1=None,
        skt=None,
    )


@dataclass
class AdmissibleSet:
    """Solution set of Q(a, b) = 0 in exact form.

    kind 'line':      a = a0, b free nonzero.
    kind 'quadratic': b^2 = -(quad[0] a^2 + quad[1] a + quad[2]) / scale with
                      the open a-interval where b^2 > 0 given by the roots of
                      the monic-cleared quadratic (rational roots reported
                      exactly; otherwise coefficient/discriminant data).
    kind 'empty':     no admissible (a, b).
    """

    kind: str
    a0: Optional[Fraction] = None
    quad: Optional[tuple] = None  # (alpha, beta, gamma) with Q = alpha a^2 + ...
    discriminant: Optional[Fraction] = None
    rational_roots: Optional[tuple] = None


def solve_admissible(n1: int, n2: int) -> AdmissibleSet:
    """Describe all (a, b) with Q = 0 for factors of the given sizes."""
    if n1 < 1 or n2 < 1 or n1 + n2 + 1 <= 3:
        raise BadDimensions("need n1, n2 >= 1 with n1 + n2 + 1 > 3")
    if n2 == 1:
        if n1 == 1:
            raise BadDimensions("n1 = n2 = 1 is the n = 3 case")
        # Q = n1(n1-1) + 2 a n1, independent of b
        return AdmissibleSet(kind="line", a0=Fraction(-(n1 - 1), 2))
    alpha = Fraction(n2 * (n2 - 1))
    beta = Fraction(2 * n1 * n2)
    gamma = Fraction(n1 * (n1 - 1))
    disc = beta * beta - 4 * alpha * gamma
    roots = None
    if disc >= 0:
        from math import isqrt

        num = disc.numerator
        den = disc.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn == num and rd * rd == den:
            sq = Fraction(rn, rd)
            roots = (
                (-beta - sq) / (2 * alpha),
                (-beta + sq) / (2 * alpha),
            )
    return AdmissibleSet(
        kind="quadratic",
        quad=(alpha, beta, gamma),
        discriminant=disc,
        rational_roots=roots,
    )


# ---------------------------------------------------------------------------
# circle-bundle extension
# ---------------------------------------------------------------------------


class ContactData:
    """Odd-dimensional invariant almost-contact metric data plus curvature.

    Carries (algebra, eta, xi, phi, Phi, F) over a real coframe e1..e_{2n-1};
    the compatible metric g = Phi(., phi .) + eta ⊗ eta is derived.
    Construction verifies the quasi-Sasakian-level identities:
      eta(xi) = 1, phi(xi) = 0, eta∘phi = 0, phi^2 = -Id + xi ⊗ eta,
      Phi = g(phi ., .) with g symmetric positive definite,
      dPhi = 0, dF = 0, F(xi, .) = 0, F(phi X, Y) + F(X, phi Y) = 0,
      and (d eta)(xi, .) = 0.
    Normality is not checked directly; the bundle extension surfaces its
    failure as a non-integrable complex structure.
    """

    def __init__(self, algebra: RealLieAlgebra, eta: Form, xi: list, phi: list,
                 Phi: Form, F: Form):
        self.algebra = algebra
        self.m = algebra.m
        if self.m % 2 == 0 or self.m < 3:
            raise NotQuasiSasakian("contact data needs odd dimension >= 3")
        self.eta = eta
        self.xi = [cr(v) for v in xi]
        self.phi = linalg.mat(phi)
        self.Phi = Phi
        self.F = F
        self._check()

    # -- pairing helpers ------------------------------------------------------

    def _pair_1(self, alpha: Form, vec: list) -> ComplexRational:
        out = ZERO
        for (r,), c in alpha.terms.items():
            out = out + c * vec[r - 1]
        return out

    @staticmethod
    def _eval_2(beta: Form, a: int, b: int) -> ComplexRational:
        """beta(e_a, e_b) for basis vectors (1-based indices)."""
        if a == b:
            return ZERO
        if a < b:
            return beta.terms.get((a, b), ZERO)
        return -beta.terms.get((b, a), ZERO)

    def _phi_column(self, b: int) -> list:
        return [self.phi[a][b - 1] for a in range(self.m)]

    def _check(self):
        m = self.m
        if self._pair_1(self.eta, self.xi) != 1:
            raise NotQuasiSasakian("eta(xi) != 1")
        phi_xi = [
            sum((self.phi[a][b] * self.xi[b] for b in range(m)), ZERO)
            for a in range(m)
        ]
        if any(v for v in phi_xi):
            raise NotQuasiSasakian("phi(xi) != 0")
        eta_row = [self.eta.terms.get((r,), ZERO) for r in range(1, m + 1)]
        for b in range(m):
            val = sum((eta_row[a] * self.phi[a][b] for a in range(m)), ZERO)
            if val:
                raise NotQuasiSasakian("eta ∘ phi != 0")
        phi2 = linalg.mat_mul(self.phi, self.phi)
        for a in range(m):
            for b in range(m):
                expect = self.xi[a] * eta_row[b] - (ONE if a == b else ZERO)
                if phi2[a][b] != expect:
                    raise NotQuasiSasakian("phi^2 != -Id + xi ⊗ eta")
        # derived metric g = Phi(., phi .) + eta ⊗ eta must be symmetric PD
        g = [[ZERO] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                val = eta_row[a] * eta_row[b]
                for c in range(m):
                    if self.phi[c][b]:
                        val = val + self._eval_2(self.Phi, a + 1, c + 1) * self.phi[c][b]
                g[a][b] = val
        for a in range(m):
            for b in range(m):
                if g[a][b] != g[b][a] or not g[a][b].is_real:
                    raise NotQuasiSasakian("derived metric is not symmetric real")
        for minor in linalg.leading_minors(g):
            if not (minor.is_real and minor.re > 0):
                raise NotQuasiSasakian("derived metric is not positive definite")
        self.g = g
        # Phi must be reproduced by g(phi ., .)
        for a in range(m):
            for b in range(m):
                val = sum(
                    (self.phi[c][a] * g[c][b] for c in range(m) if self.phi[c][a]),
                    ZERO,
                )
                if val != self._eval_2(self.Phi, a + 1, b + 1):
                    raise NotQuasiSasakian("Phi != g(phi ., .)")
        if not self.algebra.d(self.Phi).is_zero:
            raise NotQuasiSasakian("dPhi != 0")
        if not self.algebra.d(self.F).is_zero:
            raise NotQuasiSasakian("F is not closed")
        deta = self.algebra.d(self.eta)
        for form, name in ((self.F, "F"), (deta, "d eta")):
            for b in range(1, m + 1):
                val = ZERO
                for a in range(1, m + 1):
                    val = val + self.xi[a - 1] * self._eval_2(form, a, b)
                if val:
                    raise NotQuasiSasakian(f"{name}(xi, .) != 0")
        for a in range(1, m + 1):
            for b in range(a, m + 1):
                val = ZERO
                for c in range(m):
                    if self.phi[c][a - 1]:
                        val = val + self.phi[c][a - 1] * self._eval_2(self.F, c + 1, b)
                    if self.phi[c][b - 1]:
                        val = val + self.phi[c][b - 1] * self._eval_2(self.F, a, c + 1)
                if val:
                    raise NotQuasiSasakian("F is not phi-invariant")


def contact_to_json(contact: "ContactData") -> dict:
    """Serialize contact data with exact rational strings."""
    from .dsl import real_form_to_json
    from .scalars import format_rational

    return {
        "dim": contact.m,
        "d": [real_form_to_json(f) for f in contact.algebra.d_of],
        "eta": real_form_to_json(contact.eta),
        "xi": [format_rational(v.real_part()) for v in contact.xi],
        "phi": [
            [format_rational(v.real_part()) for v in row] for row in contact.phi
        ],
        "Phi": real_form_to_json(contact.Phi),
        "F": real_form_to_json(contact.F),
    }


def contact_from_json(spec: dict) -> "ContactData":
    from fractions import Fraction as _F

    from .dsl import real_form_from_json

    dim = int(spec["dim"])
    algebra = RealLieAlgebra(dim, [real_form_from_json(e) for e in spec["d"]])
    return ContactData(
        algebra=algebra,
        eta=real_form_from_json(spec["eta"]),
        xi=[cr(_F(v)) for v in spec["xi"]],
        phi=[[cr(_F(v)) for v in row] for row in spec["phi"]],
        Phi=real_form_from_json(spec["Phi"]),
        F=real_form_from_json(spec["F"]),
    )


@dataclass
class BundleExtension:
    """Result of the S^1-extension of contact data by a curvature form."""

    frame: ComplexFrame
    metric: Metric
    criterion_form: Form  # (d eta ^ d eta + F ^ F) ^ Phi^{n-3}, on the base
    criterion_scalar: Fraction  # against the complex orientation
    base_dim: int

    @property
    def structure(self):
        return self.frame.structure


def bundle_extend(contact: ContactData) -> BundleExtension:
    """Extend contact data to a complex structure with d(theta) = F.

    Raises NotIntegrable when the induced J fails integrability, which is
    how a non-normal contact structure surfaces at this level.
    """
    m = contact.m          # 2n - 1
    dim = m + 1            # 2n
    n = dim // 2
    # d on the extension: old equations plus d(theta) = F
    d_of = list(contact.algebra.d_of) + [contact.F]
    eta_row = [contact.eta.terms.get((r,), ZERO) for r in range(1, m + 1)]
    # J = phi on ker eta ∩ ker theta, J xi = -T, J T = xi
    J = [[ZERO] * dim for _ in range(dim)]
    for a in range(m):
        for b in range(m):
            J[a][b] = contact.phi[a][b]
    for b in range(m):
        J[m][b] = -eta_row[b]  # theta(J e_b) = -eta(e_b)
    for a in range(m):
        J[a][m] = contact.xi[a]  # J T = xi
    algebra = RealLieAlgebra(dim, d_of, J=J)
    frame = complex_frame_from_real(algebra)

    # fundamental form of h = g + theta ⊗ theta: Omega(X, Y) = h(JX, Y)
    h = [[contact.g[a][b] if a < m and b < m else ZERO for b in range(dim)]
         for a in range(dim)]
    h[m][m] = ONE
    omega_terms = {}
    for a in range(1, dim + 1):
        for b in range(a + 1, dim + 1):
            val = ZERO
            for c in range(dim):
                if J[c][a - 1]:
                    val = val + J[c][a - 1] * h[c][b - 1]
            if val:
                omega_terms[(a, b)] = val
    omega_real = Form(2, omega_terms)
    metric = metric_from_form(frame.to_complex(omega_real), n)

    d_eta = contact.algebra.d(contact.eta)
    crit = wedge(d_eta, d_eta) + wedge(contact.F, contact.F)
    phi_pow = Form.scalar(1)
    for _ in range(n - 3):
        phi_pow = wedge(phi_pow, contact.Phi)
    crit = wedge(crit, phi_pow)

    # scalar against the complex orientation: crit ^ eta ^ theta compared
    # with the positively oriented real volume i^n sigma
    theta = Form.gen(dim)
    top = wedge(wedge(crit, contact.eta), theta)
    full = tuple(range(1, dim + 1))
    raw = top.terms.get(full, ZERO)
    orientation = _orientation_sign(frame, n, dim)
    scalar = (raw * orientation).real_part()
    return BundleExtension(
        frame=frame,
        metric=metric,
        criterion_form=crit,
        criterion_scalar=scalar,
        base_dim=m,
    )


def _orientation_sign(frame: ComplexFrame, n: int, dim: int) -> Fraction:
    """Sign of e^{1..2n} against the complex volume i^n w1^~w1^...^wn^~wn."""
    top_complex = frame.to_complex(Form(dim, {tuple(range(1, dim + 1)): ONE}))
    sigma = tuple(range(1, dim + 1))
    c = top_complex.terms.get(sigma, ZERO)
    val = (I ** n / c).real_part()
    return Fraction(1) if val > 0 else Fraction(-1)
