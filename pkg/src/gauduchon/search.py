"""Feasibility search over metric-coefficient space.

Sampling draws -iX = M M* + delta I with small rational M, which is positive
definite by construction.  Candidates are screened with a floating mirror of
the engine and every claim is re-verified in exact arithmetic.  For targets
asking a scalar to vanish, the closing move exploits that the Gauduchon
numerator is affine in each single coefficient x_{jk}: raising one diagonal
entry keeps positivity, so a sign change along a diagonal line yields an
exact rational witness.

Infeasibility is only ever claimed with a closed-form certificate from the
catalog; otherwise the outcome is 'exhausted'.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .catalog import (
    Reduced6Params,
    balanced_obstruction_family8,
    skt_scalar_nilpotent6,
)
from .errors import BadParams, BadT
from .forms import Form, wedge
from .hermitian import (
    Metric,
    gamma_numerator,
    gamma_scalar,
    gauduchon_form,
    omega_power,
)
from .scalars import I, ZERO, ComplexRational, cr, format_rational
from .structures import StructureEquations

DEFAULT_BUDGET = 10_000
DEFAULT_SEED = 0x5EED
POSITIVITY_PADDING = Fraction(1, 1024)


@dataclass(frozen=True)
class Target:
    """What the search is looking for.

    kind: gamma_negative | gamma_positive | gauduchon_zero | skt | balanced
    k:    the Gauduchon index for the gamma/gauduchon kinds
    """

    kind: str
    k: Optional[int] = None

    _KINDS = ("gamma_negative", "gamma_positive", "gauduchon_zero", "skt", "balanced")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise BadParams(f"unknown target kind {self.kind!r}")
        if self.kind.startswith(("gamma", "gauduchon")) and self.k is None:
            raise BadParams(f"target {self.kind} needs k")

    def describe(self) -> str:
        return {
            "gamma_negative": f"gamma{self.k}<0",
            "gamma_positive": f"gamma{self.k}>0",
            "gauduchon_zero": f"gauduchon{self.k}=0",
            "skt": "skt",
            "balanced": "balanced",
        }[self.kind]


def parse_target(text: str) -> Target:
    """Parse CLI target syntax: gamma1<0, gamma2>0, gauduchon1=0, skt, balanced."""
    text = text.strip()
    if text == "skt":
        return Target("skt")
    if text == "balanced":
        return Target("balanced")
    try:
        if text.startswith("gamma"):
            body = text[len("gamma"):]
            for op, kind in (("<0", "gamma_negative"), (">0", "gamma_positive")):
                if body.endswith(op):
                    return Target(kind, k=int(body[: -len(op)]))
        if text.startswith("gauduchon") and text.endswith("=0"):
            return Target("gauduchon_zero", k=int(text[len("gauduchon"):-2]))
    except ValueError:
        pass
    raise BadParams(f"cannot parse target {text!r}")


@dataclass
class SearchOutcome:
    status: str  # witness | infeasible_certified | exhausted
    target: str
    seed: int
    budget: int
    samples_used: int
    witness: Optional[Metric] = None
    certificate: Optional[dict] = None
    replay: Optional[str] = None

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "target": self.target,
            "seed": self.seed,
            "budget": self.budget,
            "samples_used": self.samples_used,
            "witness": None,
            "certificate": self.certificate,
            "replay": self.replay,
        }
        if self.witness is not None:
            out["witness"] = {
                "n": self.witness.n,
                "X": [
                    [
                        {"re": format_rational(v.re), "im": format_rational(v.im)}
                        for v in row
                    ]
                    for row in self.witness.x
                ],
            }
        return out

    def to_bytes(self) -> bytes:
        return json.dumps(self.to_json(), indent=2, sort_keys=True).encode()


# ---------------------------------------------------------------------------
# sampling and the floating mirror
# ---------------------------------------------------------------------------


def sample_positive_metric(rng: random.Random, n: int) -> Metric:
    """X = i (M M* + delta I) with small rational M; exactly positive."""
    m = [
        [
            ComplexRational(
                Fraction(rng.randint(-8, 8), rng.choice((1, 2, 4))),
                Fraction(rng.randint(-8, 8), rng.choice((1, 2, 4))),
            )
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    h = [[ZERO for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            acc = ZERO
            for t in range(n):
                acc = acc + m[j][t] * m[k][t].conjugate()
            h[j][k] = acc
        h[j][j] = h[j][j] + cr(POSITIVITY_PADDING)
    return Metric([[I * h[j][k] for k in range(n)] for j in range(n)])


def _gamma_float(metric: Metric, k: int, se_float: StructureEquations, n: int) -> float:
    omega = metric.fundamental_form().map_coefficients(complex)
    num = wedge(se_float.ddbar(omega_power(omega, k)), omega_power(omega, n - k - 1))
    c = num.terms.get(tuple(range(1, 2 * n + 1)), 0j)
    val = 0.5j * c * (-1j) ** n
    return val.real


def _form_float_norm(f: Form) -> float:
    return sum(abs(c) for c in f.terms.values())


# ---------------------------------------------------------------------------
# certificates from the catalog closed forms
# ---------------------------------------------------------------------------


def _certificate(se, target, family, params) -> Optional[SearchOutcome]:
    """Closed-form short-circuits; returns None when sampling must decide."""

    def outcome(status, witness=None, cert=None):
        return SearchOutcome(
            status=status,
            target=target.describe(),
            seed=0,
            budget=0,
            samples_used=0,
            witness=witness,
            certificate=cert,
        )

    def diag_witness():
        m = Metric.diagonal(se.n)
        assert _verify(se, target, m)
        return m

    if family in ("nilpotent6", "reduced6", "jt"):
        if family == "jt":
            t = Fraction(params)
            params = Reduced6Params(rho=1, B=cr(1), x=Fraction(1) / t, y=Fraction(0))
            family = "reduced6"
        if family == "reduced6":
            params = params.as_nilpotent6()
        K = skt_scalar_nilpotent6(params)
        cert = {"name": "sign-fixed scalar", "K": str(K)}
        if target.kind == "gamma_negative" and target.k == 1:
            if K < 0:
                return outcome("witness", diag_witness())
            return outcome(
                "infeasible_certified",
                cert={**cert, "reason": "K >= 0 forces gamma1 >= 0 for every metric"},
            )
        if target.kind == "gamma_positive" and target.k == 1:
            if K > 0:
                return outcome("witness", diag_witness())
            return outcome(
                "infeasible_certified",
                cert={**cert, "reason": "K <= 0 forces gamma1 <= 0 for every metric"},
            )
        if (target.kind == "gauduchon_zero" and target.k == 1) or target.kind == "skt":
            if K == 0:
                return outcome("witness", diag_witness())
            return outcome(
                "infeasible_certified",
                cert={**cert, "reason": "K != 0 is metric-independent"},
            )
        return None

    if family == "nonnilpotent6":
        if target.kind == "gamma_positive" and target.k == 1:
            return outcome("witness", diag_witness())
        if target.kind in ("gamma_negative", "gauduchon_zero") and target.k == 1 or (
            target.kind == "skt"
        ):
            return outcome(
                "infeasible_certified",
                cert={
                    "name": "positive-definite scalar",
                    "reason": "gamma1 = (mu2^2 + mu3^2) / (6 det(-iX)) > 0 always",
                },
            )
        return None

    if family == "family8":
        p, q = Fraction(params[0]), Fraction(params[1])
        if target.kind == "skt":
            return outcome(
                "infeasible_certified",
                cert={
                    "name": "fixed nonzero component",
                    "reason": "ddbar(Omega) has the term -2 x44 w2^~w2^w3^~w3 "
                              "and x44 != 0 for positive metrics",
                },
            )
        if target.kind == "gauduchon_zero" and target.k in (1, 2) and p <= 0:
            return outcome(
                "infeasible_certified",
                cert={
                    "name": "one-signed obstruction",
                    "reason": "for p <= 0 every summand of the obstruction "
                              "scalar has the same sign on positive metrics",
                },
            )
        if target.kind == "balanced":
            if q != 0:
                return outcome(
                    "infeasible_certified",
                    cert={
                        "name": "conjugate pair",
                        "reason": "balanced forces the coefficient p+iq real",
                    },
                )
            if p <= 0:
                return outcome(
                    "infeasible_certified",
                    cert={
                        "name": "positive minors",
                        "reason": "p c0 = c1 + c2 with c0, c1, c2 > 0 needs p > 0",
                    },
                )
        return None

    return None


# ---------------------------------------------------------------------------
# exact verification and the closing move
# ---------------------------------------------------------------------------


def _verify(se: StructureEquations, target: Target, metric: Metric) -> bool:
    if not metric.is_positive():
        return False
    if target.kind == "gamma_negative":
        return gamma_scalar(metric, target.k, se) < 0
    if target.kind == "gamma_positive":
        return gamma_scalar(metric, target.k, se) > 0
    if target.kind == "gauduchon_zero":
        return gauduchon_form(metric, target.k, se).is_zero
    omega = metric.fundamental_form()
    if target.kind == "skt":
        return se.ddbar(omega).is_zero
    if target.kind == "balanced":
        return se.d(omega_power(omega, se.n - 1)).is_zero
    raise BadParams(target.kind)


def _bump_diagonal(metric: Metric, j: int, amount: Fraction) -> Metric:
    x = [row[:] for row in metric.x]
    x[j][j] = x[j][j] + ComplexRational(0, amount)
    return Metric(x)


def close_scalar_zero(
    metric: Metric, scalar: Callable[[Metric], Fraction]
) -> Optional[Metric]:
    """Exact zero of an entrywise-affine scalar along a diagonal ray.

    Raising a diagonal entry of -iX preserves positivity, so whenever the
    scalar and its slope in some u_j = -i x_{jj} have opposite signs the
    affine root lies above the current value and gives an exact witness.
    """
    base = scalar(metric)
    if base == 0:
        return metric
    n = metric.n
    for j in range(n):
        slope = scalar(_bump_diagonal(metric, j, Fraction(1))) - base
        if slope != 0 and (slope > 0) != (base > 0):
            root = -base / slope
            candidate = _bump_diagonal(metric, j, root)
            if candidate.is_positive() and scalar(candidate) == 0:
                return candidate
    return None


def find_metric(
    se: StructureEquations,
    target: Target,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    family: Optional[str] = None,
    params=None,
) -> SearchOutcome:
    """Deterministic search for a positive metric meeting the target.

    When (family, params) name a catalog entry with a closed form, the
    answer may be certified without sampling.  Witnesses always pass the
    exact predicate; sampling failure is reported as 'exhausted', never as
    nonexistence.
    """
    if budget <= 0:
        raise BadParams("budget must be positive")
    if family is not None:
        cert = _certificate(se, target, family, params)
        if cert is not None:
            cert.seed = seed
            cert.budget = budget
            return cert

    rng = random.Random(seed)
    n = se.n
    se_float = se.map_coefficients(complex)
    used = 0

    def finish(status, witness=None, cert=None):
        return SearchOutcome(
            status=status,
            target=target.describe(),
            seed=seed,
            budget=budget,
            samples_used=used,
            witness=witness,
            certificate=cert,
        )

    scalar_fn = None
    if target.kind == "gauduchon_zero":
        scalar_fn = lambda m: gamma_numerator(m, target.k, se)  # noqa: E731
    if family == "family8" and target.kind == "balanced":
        p, q = params
        if Fraction(q) == 0:
            scalar_fn = lambda m: balanced_obstruction_family8(p, q, m)["defect"]  # noqa: E731

    for _ in range(budget):
        used += 1
        metric = sample_positive_metric(rng, n)
        if target.kind in ("gamma_negative", "gamma_positive"):
            val = _gamma_float(metric, target.k, se_float, n)
            want_neg = target.kind == "gamma_negative"
            if (val < -1e-12) == want_neg and abs(val) > 1e-12:
                if _verify(se, target, metric):
                    return finish("witness", metric)
        elif scalar_fn is not None:
            if scalar_fn(metric) == 0:
                if _verify(se, target, metric):
                    return finish("witness", metric)
                continue
            witness = close_scalar_zero(metric, scalar_fn)
            if witness is not None and _verify(se, target, witness):
                return finish("witness", witness)
        else:
            # form-zero targets: cheap float screen, exact confirmation
            omega = metric.fundamental_form().map_coefficients(complex)
            if target.kind == "skt":
                screened = _form_float_norm(se_float.ddbar(omega)) < 1e-9
            else:
                screened = _form_float_norm(
                    se_float.d(omega_power(omega, n - 1))
                ) < 1e-9
            if screened and _verify(se, target, metric):
                return finish("witness", metric)
    return finish("exhausted")


# ---------------------------------------------------------------------------
# dedicated feasibility answers
# ---------------------------------------------------------------------------


@dataclass
class Feasibility:
    feasible: bool
    threshold: Optional[Fraction] = None
    witness_recipe: Optional[str] = None
    label: Optional[str] = None
    certificate: Optional[dict] = None


def reduced6_feasibility(params: Reduced6Params) -> Feasibility:
    """Existence of a metric with negative first Gauduchon scalar.

    Feasible iff 2x > rho + |B|^2; the scalar's sign is metric-independent,
    so any positive diagonal metric is then a witness.
    """
    from .catalog import classify_reduced6

    b2 = params.B.re**2 + params.B.im**2
    threshold = Fraction(params.rho) + b2
    feasible = 2 * params.x > threshold
    return Feasibility(
        feasible=feasible,
        threshold=threshold,
        witness_recipe="any positive diagonal metric" if feasible else None,
        label=classify_reduced6(params),
        certificate=None
        if feasible
        else {"name": "sign-fixed scalar", "K": str(threshold - 2 * params.x)},
    )


def balanced_feasibility_jt(t) -> Feasibility:
    """No invariant balanced metric exists for the jt family, t in (0, 1].

    The balanced constraint pins x12 = i (mu + lambda/t), whose 2x2 minor
    defect mu^2 + ((2-t)/t) lambda mu + lambda^2/t^2 is positive for all
    lambda, mu > 0: the quadratic has positive coefficients and negative
    discriminant (t-4)/t, contradicting positive definiteness.
    """
    t = Fraction(t)
    if not 0 < t <= 1:
        raise BadT(f"t must be in (0, 1], got {t}")
    coeffs = (Fraction(1), (2 - t) / t, 1 / t**2)
    discriminant = (t - 4) / t
    assert all(c > 0 for c in coeffs) and discriminant < 0
    return Feasibility(
        feasible=False,
        certificate={
            "name": "determinant quadratic",
            "quadratic_in_mu_lambda": [str(c) for c in coeffs],
            "discriminant": str(discriminant),
        },
    )
