"""Invariant Hermitian metrics on a fixed set of structure equations.

A metric is the matrix X = (x_{jk}) of its fundamental form
Omega = sum x_{jk} w^j ^ ~w^k with conj(x_{kj}) = -x_{jk}; positivity is
equivalent to -iX being Hermitian positive definite.  This module computes
the k-th Gauduchon forms ddbar(Omega^k) ^ Omega^{n-k-1}, the associated
sign scalar, the Lee form, the metric-class predicates, and the Lefschetz
operator pair with its commutation identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from . import linalg
from .errors import BadK, NotPositive, NotSkewHermitian
from .forms import Form, Monomial, conj_rank, holo_rank, substitute, wedge
from .scalars import I, ONE, ZERO, ComplexRational, cr
from .structures import StructureEquations


class Metric:
    """Skew-Hermitian coefficient matrix of an invariant fundamental form."""

    __slots__ = ("n", "x", "_positive")

    def __init__(self, x: list):
        self.x = linalg.mat(x)
        self.n = len(self.x)
        if any(len(row) != self.n for row in self.x):
            raise NotSkewHermitian("coefficient matrix must be square")
        for j in range(self.n):
            for k in range(self.n):
                if self.x[k][j].conjugate() != -self.x[j][k]:
                    raise NotSkewHermitian(
                        f"conj(x[{k}][{j}]) != -x[{j}][{k}]"
                    )
        self._positive: Optional[bool] = None

    @staticmethod
    def diagonal(n: int, entries=None) -> "Metric":
        """diag(i*u_1, ..., i*u_n); defaults to the standard diag(i,...,i)."""
        if entries is None:
            entries = [1] * n
        x = [[I * cr(entries[j]) if j == k else ZERO for k in range(n)] for j in range(n)]
        return Metric(x)

    def minus_i_x(self) -> list:
        """The Hermitian matrix -iX; positive definite iff the metric is."""
        return [[(-I) * v for v in row] for row in self.x]

    def is_positive(self) -> bool:
        """Exact positivity: all leading principal minors of -iX positive."""
        if self._positive is None:
            ok = True
            for minor in linalg.leading_minors(self.minus_i_x()):
                if not (minor.is_real and minor.re > 0):
                    ok = False
                    break
            self._positive = ok
        return self._positive

    def require_positive(self):
        if not self.is_positive():
            raise NotPositive("metric coefficient matrix is not positive definite")

    def det_minus_i_x(self) -> Fraction:
        return linalg.mat_det(self.minus_i_x()).real_part()

    def fundamental_form(self) -> Form:
        """Omega = sum_{j,k} x_{jk} w^j ^ ~w^k; real in the sense conj = id."""
        terms: Dict[Monomial, ComplexRational] = {}
        for j in range(1, self.n + 1):
            for k in range(1, self.n + 1):
                c = self.x[j - 1][k - 1]
                if not c:
                    continue
                a, b = holo_rank(j), conj_rank(k)
                if a < b:
                    mon, val = (a, b), c
                else:
                    mon, val = (b, a), -c
                terms[mon] = terms.get(mon, ZERO) + val
        return Form(2, terms)

    def scale(self, c) -> "Metric":
        return Metric([[v * cr(c) for v in row] for row in self.x])

    def __eq__(self, other):
        if not isinstance(other, Metric):
            return NotImplemented
        return self.n == other.n and linalg.mat_eq(self.x, other.x)

    def __repr__(self):
        rows = "; ".join(
            "[" + ", ".join(repr(v) for v in row) + "]" for row in self.x
        )
        return f"Metric({rows})"


def metric_from_form(omega: Form, n: int) -> Metric:
    """Inverse of fundamental_form; insists the input is a (1,1)-form."""
    x = [[ZERO for _ in range(n)] for _ in range(n)]
    for mon, c in omega.terms.items():
        (p, q) = Form.monomial_bidegree(mon)
        if (p, q) != (1, 1):
            raise ValueError("not a (1,1)-form")
        a, b = mon
        if a & 1:  # w^j ^ ~w^k stored in canonical order
            j, k = (a + 1) // 2, b // 2
            x[j - 1][k - 1] = x[j - 1][k - 1] + c
        else:  # canonical ~w^k ^ w^j carries the flipped sign
            k, j = a // 2, (b + 1) // 2
            x[j - 1][k - 1] = x[j - 1][k - 1] - c
    return Metric(x)


# ---------------------------------------------------------------------------
# volume data and the Gauduchon scalar
# ---------------------------------------------------------------------------


def sigma_monomial(n: int) -> Monomial:
    """The canonical top monomial w1^~w1^...^wn^~wn (ranks 1..2n)."""
    return tuple(range(1, 2 * n + 1))


def top_coefficient(f: Form, n: int) -> ComplexRational:
    """Coefficient of an (n,n)-form on the canonical top monomial."""
    if f.is_zero:
        return ZERO
    return f.terms.get(sigma_monomial(n), ZERO)


def omega_power(omega: Form, k: int) -> Form:
    out = Form.scalar(1)
    for _ in range(k):
        out = wedge(out, omega)
    return out


def volume_coefficient(metric: Metric) -> ComplexRational:
    """coeff(Omega^n) = n! i^n det(-iX); positive metrics have det(-iX) > 0."""
    n = metric.n
    fact = 1
    for j in range(2, n + 1):
        fact *= j
    return cr(fact) * I**n * cr(metric.det_minus_i_x())


def gauduchon_form(metric: Metric, k: int, se: StructureEquations) -> Form:
    """The (n,n)-form ddbar(Omega^k) ^ Omega^{n-k-1}."""
    n = se.n
    if not 1 <= k <= n - 1:
        raise BadK(f"k must be in 1..{n - 1}, got {k}")
    omega = metric.fundamental_form()
    return wedge(se.ddbar(omega_power(omega, k)), omega_power(omega, n - k - 1))


def gamma_numerator(metric: Metric, k: int, se: StructureEquations) -> Fraction:
    """The real scalar (i/2) (-i)^n coeff(ddbar Omega^k ^ Omega^{n-k-1}).

    Equal to gamma_scalar times the positive quantity n! det(-iX); affine in
    every single coefficient x_{jk}, which the search module exploits.
    """
    n = se.n
    c = top_coefficient(gauduchon_form(metric, k, se), n)
    val = (I / cr(2)) * (-I) ** n * c
    return val.real_part()


def gamma_scalar(metric: Metric, k: int, se: StructureEquations) -> Fraction:
    """The constant r with (i/2) ddbar(Omega^k) ^ Omega^{n-k-1} = r Omega^n.

    Exactly rational for positive metrics; its sign is a conformal-class
    invariant deciding the k-th Gauduchon condition at the invariant level.
    """
    metric.require_positive()
    n = se.n
    num = top_coefficient(gauduchon_form(metric, k, se), n)
    den = volume_coefficient(metric)
    return ((I / cr(2)) * num / den).real_part()


# ---------------------------------------------------------------------------
# Lee form
# ---------------------------------------------------------------------------


def lee_form(metric: Metric, se: StructureEquations) -> Form:
    """The unique 1-form theta with d(Omega^{n-1}) = theta ^ Omega^{n-1}."""
    metric.require_positive()
    n = se.n
    omega_pow = omega_power(metric.fundamental_form(), n - 1)
    target = se.d(omega_pow)
    ranks = list(range(1, 2 * n + 1))
    basis_mons = [
        tuple(r for r in ranks if r != hole) for hole in ranks
    ]  # all (2n-1)-monomials
    cols = []
    for r in ranks:
        img = wedge(Form.gen(r), omega_pow)
        cols.append([img.terms.get(m, ZERO) for m in basis_mons])
    matrix = [[cols[c][row] for c in range(2 * n)] for row in range(2 * n)]
    rhs = [target.terms.get(m, ZERO) for m in basis_mons]
    sol = linalg.solve(matrix, rhs)
    theta = Form(1, {(r,): sol[idx] for idx, r in enumerate(ranks)})
    assert theta.conjugate() == theta, "Lee form must be real"
    return theta


def lee_form_via_codifferential(metric: Metric, se: StructureEquations) -> Form:
    """Cross-check: theta = J(d* Omega) with d* the metric adjoint of d.

    The sign of J on 1-forms varies across conventions; frozen here (once,
    against lee_form on a reduced-family example with nonzero Lee form) as
    (J alpha) = -alpha∘J, i.e. J w^j = -i w^j, with d* the adjoint in the
    unitary-monomial inner product and no further constant.
    """
    metric.require_positive()
    lef = Lefschetz(metric)
    omega_u = lef._to_unitary(metric.fundamental_form())
    # adjoint of d: <d* f, m> = <f, d m> over degree-1 monomials m
    ranks = list(range(1, 2 * se.n + 1))
    dstar_terms: Dict[Monomial, ComplexRational] = {}
    f_u = omega_u
    for r in ranks:
        dm = se.d(lef._from_unitary(Form.gen(r)))
        dm_u = lef._to_unitary(dm)
        val = ZERO
        for mon, c in f_u.terms.items():
            cc = dm_u.terms.get(mon)
            if cc is not None:
                val = val + c * cc.conjugate() * lef._weight(mon)
        if val:
            dstar_terms[(r,)] = val / lef._weight((r,))
    dstar = Form(1, dstar_terms)
    dstar = lef._from_unitary(dstar)
    out = Form.zero()
    for mon, c in dstar.terms.items():
        factor = -I if mon[0] & 1 else I
        out = out + Form(1, {mon: c * factor})
    return out


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass
class ClassReport:
    """Full verdict for one (structure, metric) pair."""

    n: int
    kahler: bool
    skt: bool
    astheno: bool
    balanced: bool
    gauduchon: Dict[int, bool]
    gamma: Dict[int, Fraction]
    lee: Form
    label: str

    def to_json(self) -> dict:
        from .dsl import form_to_json  # local import to avoid a cycle

        return {
            "n": self.n,
            "kahler": self.kahler,
            "skt": self.skt,
            "astheno": self.astheno,
            "balanced": self.balanced,
            "gauduchon": {str(k): v for k, v in sorted(self.gauduchon.items())},
            "gamma": {str(k): str(v) for k, v in sorted(self.gamma.items())},
            "lee_form": form_to_json(self.lee),
            "label": self.label,
        }


def classify(metric: Metric, se: StructureEquations) -> ClassReport:
    """Exact zero tests for every metric class plus the gamma scalars."""
    metric.require_positive()
    n = se.n
    omega = metric.fundamental_form()
    kahler = se.d(omega).is_zero
    skt = se.ddbar(omega).is_zero
    astheno = se.ddbar(omega_power(omega, n - 2)).is_zero if n >= 3 else True
    balanced = se.d(omega_power(omega, n - 1)).is_zero
    gauduchon = {
        k: gauduchon_form(metric, k, se).is_zero for k in range(1, n)
    }
    gamma = {k: gamma_scalar(metric, k, se) for k in range(1, n)}
    lee = lee_form(metric, se)
    if kahler:
        label = "kahler"
    else:
        names = [name for name, flag in
                 (("skt", skt), ("balanced", balanced), ("astheno", astheno))
                 if flag]
        names += [f"gauduchon{k}" for k, flag in sorted(gauduchon.items()) if flag]
        label = "+".join(names) if names else "hermitian"
    return ClassReport(
        n=n,
        kahler=kahler,
        skt=skt,
        astheno=astheno,
        balanced=balanced,
        gauduchon=gauduchon,
        gamma=gamma,
        lee=lee,
        label=label,
    )


# ---------------------------------------------------------------------------
# Lefschetz operators
# ---------------------------------------------------------------------------


def _binom_general(a: int, k: int) -> Fraction:
    """Binomial coefficient with integer (possibly negative) upper index."""
    if k < 0:
        return Fraction(0)
    num = 1
    for t in range(k):
        num *= a - t
    den = 1
    for t in range(1, k + 1):
        den *= t
    return Fraction(num, den)


class Lefschetz:
    """The pair L (wedging with Omega) and L* (4x its metric adjoint).

    The adjoint is taken in the pointwise inner product that makes the
    monomials of a unitary coframe orthonormal; the factor 4 is the unique
    calibration for which the r <= s commutation identity
        L*^r L^s = L^s L*^r + sum_i 4^i (i!)^2 C(s,i) C(r,i) C(n-p-s+r,i)
                   L^{s-i} L*^{r-i}
    holds on p-forms with no stray constants.  The unitary coframe is
    produced by an exact LDL* congruence of -iX, keeping everything
    rational: with -iX = L D L*, the coframe tau' = L^T w has
    Omega = i sum_j d_j tau'^j ^ ~tau'^j and monomial weights prod 1/d_j.
    """

    def __init__(self, metric: Metric):
        metric.require_positive()
        self.metric = metric
        self.n = metric.n
        self.omega = metric.fundamental_form()
        lower, diag = linalg.ldl(metric.minus_i_x())
        self.diag = diag
        n = self.n
        lt = [[lower[j][i] for j in range(n)] for i in range(n)]  # L^T
        lt_inv = linalg.mat_inverse(lt)
        # w^a = sum_j lt_inv[a][j] tau'^j
        self._w_to_u = {}
        self._u_to_w = {}
        for a in range(n):
            terms = {(holo_rank(j + 1),): lt_inv[a][j] for j in range(n) if lt_inv[a][j]}
            self._w_to_u[holo_rank(a + 1)] = Form(1, terms)
            self._w_to_u[conj_rank(a + 1)] = Form(
                1, {(mon[0] + 1,): c.conjugate() for mon, c in terms.items()}
            )
        for j in range(n):
            terms = {(holo_rank(a + 1),): lt[j][a] for a in range(n) if lt[j][a]}
            self._u_to_w[holo_rank(j + 1)] = Form(1, terms)
            self._u_to_w[conj_rank(j + 1)] = Form(
                1, {(mon[0] + 1,): c.conjugate() for mon, c in terms.items()}
            )
        self._omega_u = Form(
            2,
            {
                (holo_rank(j + 1), conj_rank(j + 1)): I * cr(diag[j])
                for j in range(n)
            },
        )
        assert self._to_unitary(self.omega) == self._omega_u

    # -- frame transport ----------------------------------------------------

    def _to_unitary(self, f: Form) -> Form:
        return substitute(f, self._w_to_u)

    def _from_unitary(self, f: Form) -> Form:
        return substitute(f, self._u_to_w)

    def _weight(self, mon: Monomial) -> Fraction:
        w = Fraction(1)
        for r in mon:
            j = (r + 1) // 2 if r & 1 else r // 2
            w /= self.diag[j - 1]
        return w

    # -- operators ------------------------------------------------------------

    def L(self, f: Form) -> Form:
        return wedge(self.omega, f)

    def adjoint(self, f: Form) -> Form:
        """The bare adjoint of L (no calibration factor)."""
        if f.is_zero or f.degree < 2:
            return Form.zero()
        g = self._to_unitary(f)
        deg = f.degree - 2
        out: Dict[Monomial, ComplexRational] = {}
        for mon in itertools.combinations(range(1, 2 * self.n + 1), deg):
            lm = wedge(self._omega_u, Form(deg, {mon: ONE}))
            val = ZERO
            for m2, c2 in lm.terms.items():
                c1 = g.terms.get(m2)
                if c1 is not None:
                    val = val + c1 * c2.conjugate() * cr(self._weight(m2))
            if val:
                out[mon] = val / cr(self._weight(mon))
        return self._from_unitary(Form(deg, out))

    def Lstar(self, f: Form) -> Form:
        return self.adjoint(f).scale(cr(4))

    def L_power(self, f: Form, k: int) -> Form:
        for _ in range(k):
            f = self.L(f)
        return f

    def Lstar_power(self, f: Form, k: int) -> Form:
        for _ in range(k):
            f = self.Lstar(f)
        return f

    def commutation_residual(self, r: int, s: int, f: Form) -> Form:
        """L*^r L^s f minus its commuted expansion; exactly zero for r <= s."""
        if r > s:
            raise ValueError("identity requires r <= s")
        if f.is_zero:
            return Form.zero()
        p = f.degree
        n = self.n
        lhs = self.Lstar_power(self.L_power(f, s), r)
        rhs = self.L_power(self.Lstar_power(f, r), s)
        for i in range(1, r + 1):
            fact_sq = 1
            for t in range(1, i + 1):
                fact_sq *= t
            fact_sq *= fact_sq
            coef = (
                Fraction(4**i * fact_sq)
                * _binom_general(s, i)
                * _binom_general(r, i)
                * _binom_general(n - p - s + r, i)
            )
            if coef:
                term = self.L_power(self.Lstar_power(f, r - i), s - i)
                rhs = rhs + term.scale(cr(coef))
        return lhs - rhs


def gauduchon_reduction_check(metric: Metric, se: StructureEquations) -> dict:
    """The L*-power reduction of the degree-lowered Gauduchon form.

    With psi = 2i ddbar(Omega) ^ Omega, verifies

        L*^n (2i ddbar Omega ^ Omega^{n-2})
            = 4^n (n!/3!) (n-3)! adj^3(psi)
            = 4^{n-3} (n!/3!) (n-3)! L*^3(psi),

    where adj = L*/4 is the uncalibrated adjoint; the two right-hand sides
    are the same number written in the two normalizations.  Returns the
    computed scalars and the exact residual.
    """
    n = se.n
    if n < 3:
        raise BadK("reduction needs n >= 3")
    lef = Lefschetz(metric)
    omega = metric.fundamental_form()
    chi = se.ddbar(omega).scale(cr(2) * I)
    psi = lef.L(chi)
    lhs_form = lef.Lstar_power(wedge(chi, omega_power(omega, n - 2)), n)
    rhs_form = lef.Lstar_power(psi, 3)
    fact = 1
    for t in range(4, n + 1):
        fact *= t  # n!/3!
    for t in range(1, n - 2):
        fact *= t  # (n-3)!
    constant = Fraction(4 ** (n - 3)) * fact
    lhs = lhs_form.terms.get((), ZERO)
    rhs = rhs_form.terms.get((), ZERO)
    residual = lhs - cr(constant) * rhs
    return {
        "lhs": lhs,
        "lstar3": rhs,
        "constant_calibrated": constant,
        "constant_display": Fraction(4**n) * fact,
        "residual": residual,
    }
