"""Structure equations of Lie algebras and the exterior differential.

StructureEquations carries a complex (1,0)-coframe w1..wn with dw^j given as
an exact 2-form; d extends to all forms as an odd derivation and splits as
del + delbar through bidegree.  RealLieAlgebra is the analogous object over
a real coframe e1..em, optionally carrying an almost complex structure J,
and complex_frame_from_real converts (coframe, J) into a complex coframe
with d transported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import linalg
from .errors import (
    DimensionMismatch,
    JacobiViolation,
    NotAlmostComplex,
    NotIntegrable,
)
from .forms import Form, conj_rank, holo_rank, merge_ranks, substitute
from .scalars import I, ONE, cr


def _derivation(f: Form, d_of_rank: List[Form], max_rank: int) -> Form:
    """Extend rank-level differentials to an odd derivation on forms."""
    if f.is_zero:
        return Form.zero()
    if f.max_rank() > max_rank:
        raise DimensionMismatch(
            f"form uses rank {f.max_rank()} but the coframe has {max_rank} generators"
        )
    terms: Dict[Tuple[int, ...], object] = {}
    for mon, c in f.terms.items():
        for t, rank in enumerate(mon):
            dgen = d_of_rank[rank - 1]
            if dgen.is_zero:
                continue
            rest = mon[:t] + mon[t + 1 :]
            base = -c if t & 1 else c
            # dgen has even degree, so moving it to the front costs no sign
            for m2, c2 in dgen.terms.items():
                merged = merge_ranks(m2, rest)
                if merged is None:
                    continue
                sign, mm = merged
                val = base * c2
                if sign < 0:
                    val = -val
                acc = terms.get(mm)
                terms[mm] = val if acc is None else acc + val
    if not terms:
        return Form.zero()
    return Form(f.degree + 1, terms)


class StructureEquations:
    """A complex coframe w1..wn with exact structure equations.

    Construction verifies d∘d = 0 on every generator (Jacobi identity) and
    that every dw^j has no (0,2)-component (integrability), so del and
    delbar are meaningful on every instance.  Instances are immutable.
    """

    __slots__ = ("n", "d_of", "_d_rank")

    def __init__(self, n: int, d_of: List[Form], _validate: bool = True):
        if len(d_of) != n:
            raise ValueError(f"need {n} differentials, got {len(d_of)}")
        self.n = n
        self.d_of = list(d_of)
        d_rank: List[Form] = []
        for j, df in enumerate(self.d_of, start=1):
            if not df.is_zero and df.degree != 2:
                raise ValueError(f"dw{j} must be a 2-form, got degree {df.degree}")
            if df.max_rank() > 2 * n:
                raise DimensionMismatch(f"dw{j} uses ranks beyond the coframe")
            d_rank.append(df)
            d_rank.append(df.conjugate())
        # reorder so _d_rank[r-1] is d of rank r
        self._d_rank = [Form.zero()] * (2 * n)
        for j in range(1, n + 1):
            self._d_rank[holo_rank(j) - 1] = d_rank[2 * (j - 1)]
            self._d_rank[conj_rank(j) - 1] = d_rank[2 * (j - 1) + 1]
        if _validate:
            self._validate()

    def _validate(self):
        for j in range(1, self.n + 1):
            res = self.component_02(self.d_of[j - 1])
            if not res.is_zero:
                raise NotIntegrable(j, res)
        for j in range(1, self.n + 1):
            res = self.d(self.d_of[j - 1])
            if not res.is_zero:
                raise JacobiViolation(j, res)

    @staticmethod
    def component_02(f: Form) -> Form:
        return f.component(0, 2)

    # -- differentials -----------------------------------------------------

    def d(self, f: Form) -> Form:
        return _derivation(f, self._d_rank, 2 * self.n)

    def partial(self, f: Form) -> Form:
        """The (p+1,q)-part of d on each pure-(p,q) component."""
        out = Form.zero()
        for (p, q), part in f.bidegree_parts().items():
            out = out + self.d(part).component(p + 1, q)
        return out

    def dbar(self, f: Form) -> Form:
        """The (p,q+1)-part of d on each pure-(p,q) component."""
        out = Form.zero()
        for (p, q), part in f.bidegree_parts().items():
            out = out + self.d(part).component(p, q + 1)
        return out

    def ddbar(self, f: Form) -> Form:
        return self.partial(self.dbar(f))

    # -- global properties ---------------------------------------------------

    def is_unimodular(self) -> bool:
        """True iff d kills every (2n-1)-monomial (exact top-degree Stokes)."""
        full = tuple(range(1, 2 * self.n + 1))
        for hole in range(2 * self.n):
            mon = full[:hole] + full[hole + 1 :]
            if not self.d(Form(2 * self.n - 1, {mon: ONE})).is_zero:
                return False
        return True

    def map_coefficients(self, fn) -> "StructureEquations":
        """Coefficient-converted copy (e.g. to floats); skips validation."""
        return StructureEquations(
            self.n, [df.map_coefficients(fn) for df in self.d_of], _validate=False
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureEquations):
            return NotImplemented
        return self.n == other.n and self.d_of == other.d_of

    def __repr__(self) -> str:
        lines = [f"n={self.n}"] + [
            f"dw{j}: {df!r}" for j, df in enumerate(self.d_of, start=1)
        ]
        return "StructureEquations(" + "; ".join(lines) + ")"


class RealLieAlgebra:
    """A real coframe e1..em with exact structure equations and optional J."""

    __slots__ = ("m", "d_of", "J")

    def __init__(self, m: int, d_of: List[Form], J: Optional[list] = None):
        if len(d_of) != m:
            raise ValueError(f"need {m} differentials, got {len(d_of)}")
        self.m = m
        self.d_of = list(d_of)
        for j, df in enumerate(self.d_of, start=1):
            if not df.is_zero and df.degree != 2:
                raise ValueError(f"de{j} must be a 2-form")
            if df.max_rank() > m:
                raise DimensionMismatch(f"de{j} uses ranks beyond the coframe")
            for c in df.terms.values():
                if not c.is_real:
                    raise ValueError(f"de{j} has a non-real coefficient")
        for j in range(1, m + 1):
            res = self.d(self.d_of[j - 1])
            if not res.is_zero:
                raise JacobiViolation(j, res)
        self.J = None
        if J is not None:
            self.J = linalg.mat(J)
            if any(not v.is_real for row in self.J for v in row):
                raise NotAlmostComplex("J must be a real matrix")
            if not linalg.mat_eq(
                linalg.mat_mul(self.J, self.J),
                [[cr(-1) if i == j else cr(0) for j in range(m)] for i in range(m)],
            ):
                raise NotAlmostComplex("J^2 != -Id")

    def d(self, f: Form) -> Form:
        return _derivation(f, self.d_of, self.m)

    def is_unimodular(self) -> bool:
        full = tuple(range(1, self.m + 1))
        for hole in range(self.m):
            mon = full[:hole] + full[hole + 1 :]
            if not self.d(Form(self.m - 1, {mon: ONE})).is_zero:
                return False
        return True

    def __repr__(self) -> str:
        lines = [f"m={self.m}"] + [
            f"de{j}: {df!r}" for j, df in enumerate(self.d_of, start=1)
        ]
        return "RealLieAlgebra(" + "; ".join(lines) + ")"


@dataclass(frozen=True)
class ComplexFrame:
    """A complex coframe over a real Lie algebra, with both transport maps.

    rows[j][a] gives w^{j+1} = sum_a rows[j][a] e^{a+1}; to_complex_table and
    to_real_table express each generator of one frame in the other.
    """

    structure: StructureEquations
    algebra: RealLieAlgebra
    rows: list
    to_complex_table: dict
    to_real_table: dict

    def to_complex(self, f: Form) -> Form:
        """Rewrite a real-coframe form in the complex coframe."""
        return substitute(f, self.to_complex_table)

    def to_real(self, f: Form) -> Form:
        """Rewrite a complex-coframe form back over the real coframe."""
        return substitute(f, self.to_real_table)


def structure_from_coframe(alg: RealLieAlgebra, rows: list) -> ComplexFrame:
    """Transport d along an explicit (1,0)-coframe.

    rows is an n x m complex matrix whose j-th row expresses w^j in the real
    coframe.  The stacked matrix [rows; conj(rows)] must be invertible.
    Raises NotIntegrable when some dw^j acquires a (0,2)-component.
    """
    m = alg.m
    if m % 2:
        raise NotAlmostComplex(f"odd-dimensional algebra (m={m}) has no coframe")
    n = m // 2
    if len(rows) != n or any(len(r) != m for r in rows):
        raise ValueError(f"coframe must be {n} rows of length {m}")
    rows = [[cr(v) for v in row] for row in rows]
    stacked = rows + [[v.conjugate() for v in row] for row in rows]
    inv = linalg.mat_inverse(stacked)

    # e^a in terms of w / ~w
    to_complex_table = {}
    for a in range(m):
        terms = {}
        for j in range(n):
            if inv[a][j]:
                terms[(holo_rank(j + 1),)] = inv[a][j]
            if inv[a][n + j]:
                terms[(conj_rank(j + 1),)] = inv[a][n + j]
        to_complex_table[a + 1] = Form(1, terms)

    to_real_table = {}
    for j in range(n):
        terms = {(a + 1,): rows[j][a] for a in range(m) if rows[j][a]}
        to_real_table[holo_rank(j + 1)] = Form(1, terms)
        to_real_table[conj_rank(j + 1)] = Form(
            1, {m_: c.conjugate() for m_, c in terms.items()}
        )

    d_of = []
    for j in range(n):
        df = Form.zero()
        for a in range(m):
            if rows[j][a] and not alg.d_of[a].is_zero:
                df = df + substitute(alg.d_of[a], to_complex_table).scale(rows[j][a])
        d_of.append(df)
    se = StructureEquations(n, d_of)
    return ComplexFrame(se, alg, rows, to_complex_table, to_real_table)


def complex_frame_from_real(alg: RealLieAlgebra) -> ComplexFrame:
    """Deterministic (1,0)-coframe from (real coframe, J).

    Applies e^a - i e^a∘J for a = 1, 2, ... in order and keeps the first n
    candidates that are linearly independent (first-nonzero pivots only), so
    the output is reproducible across runs and platforms.
    """
    if alg.J is None:
        raise NotAlmostComplex("algebra carries no J")
    m = alg.m
    n = m // 2
    kept: list = []
    echelon: list = []  # reduced copies for the independence test
    for a in range(m):
        cand = [(cr(1) if b == a else cr(0)) - I * alg.J[a][b] for b in range(m)]
        work = cand[:]
        for pivot_col, pivot_row in echelon:
            if work[pivot_col]:
                f = work[pivot_col] / pivot_row[pivot_col]
                work = [x - f * y for x, y in zip(work, pivot_row)]
        lead = next((idx for idx, v in enumerate(work) if v), None)
        if lead is None:
            continue
        kept.append(cand)
        echelon.append((lead, work))
        if len(kept) == n:
            break
    assert len(kept) == n, "J eigenspace defect; J^2 = -Id should prevent this"
    return structure_from_coframe(alg, kept)


def complex_structure_from_coframe(rows: list, m: int) -> list:
    """The real matrix J for which the given rows are (1,0)-forms.

    rows is n x m complex with [rows; conj(rows)] invertible; returns J with
    J^2 = -Id such that (w^j)∘J = i w^j for every row.
    """
    n = m // 2
    rows = [[cr(v) for v in row] for row in rows]
    stacked = rows + [[v.conjugate() for v in row] for row in rows]
    diag = [
        [I if (i == j and i < n) else (-I if i == j else cr(0)) for j in range(m)]
        for i in range(m)
    ]
    # rows are (1,0) iff row.J = i row; stacking with conjugates pins J
    J = linalg.mat_mul(linalg.mat_inverse(stacked), linalg.mat_mul(diag, stacked))
    for row in J:
        for v in row:
            if not v.is_real:
                raise NotAlmostComplex("coframe does not define a real J")
    return J
