"""Graded exterior algebra over a finite totally ordered coframe.

A monomial is a strictly increasing tuple of generator ranks (1-based).
For a complex coframe in n complex dimensions there are 2n ranks in the
interleaved order w1 < ~w1 < w2 < ~w2 < ...: the holomorphic generator wj
gets rank 2j-1, its conjugate ~wj rank 2j.  This single global order fixes
every monomial sign in the package.  Bidegree and conjugation read the
holomorphic/antiholomorphic split off rank parity, so a Form is otherwise
frame-agnostic: forms over a real coframe e1..em use ranks 1..m and simply
never call the complex-specific methods.

Coefficients are duck-typed.  The library uses ComplexRational throughout;
the search module reuses the same algebra with builtin complex.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Optional, Tuple

from .scalars import ComplexRational, cr, format_complex

Monomial = Tuple[int, ...]


def merge_ranks(a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
    """Merge two strictly increasing rank tuples into one.

    Returns (sign, merged) where sign is the parity of the shuffle, or None
    if the tuples share a rank (the wedge vanishes).
    """
    i, j, sign = 0, 0, 1
    out = []
    la = len(a)
    while i < la and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining la-i entries of a
            if (la - i) & 1:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def sort_ranks(seq: Iterable[int]) -> Optional[Tuple[int, Monomial]]:
    """Sort ranks into canonical order, tracking the permutation sign."""
    items = list(seq)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(items)):
        if items[i - 1] == items[i]:
            return None
    return sign, tuple(items)


def conjugate_rank(rank: int) -> int:
    """Partner rank under conjugation: 2j-1 <-> 2j."""
    return rank + 1 if rank & 1 else rank - 1


def rank_token(rank: int) -> str:
    """DSL token of a complex-frame rank: 'w3' or '~w3'."""
    if rank & 1:
        return f"w{(rank + 1) // 2}"
    return f"~w{rank // 2}"


def holo_rank(j: int) -> int:
    return 2 * j - 1


def conj_rank(j: int) -> int:
    return 2 * j


class Form:
    """An exterior form of one total degree with exact coefficients.

    The zero form has degree None.  Terms map canonical monomials to nonzero
    coefficients; instances are immutable by convention.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: Optional[int], terms: Dict[Monomial, object]):
        terms = {m: c for m, c in terms.items() if c}
        if not terms:
            degree = None
        self.degree = degree
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Form":
        return Form(None, {})

    @staticmethod
    def scalar(c) -> "Form":
        c = cr(c) if isinstance(c, (int, str)) else c
        return Form(0, {(): c}) if c else Form.zero()

    @staticmethod
    def gen(rank: int, coeff=None) -> "Form":
        c = ComplexRational(1) if coeff is None else coeff
        return Form(1, {(rank,): c})

    @staticmethod
    def monomial(ranks: Iterable[int], coeff=None) -> "Form":
        c = ComplexRational(1) if coeff is None else coeff
        sorted_ = sort_ranks(ranks)
        if sorted_ is None or not c:
            return Form.zero()
        sign, mon = sorted_
        return Form(len(mon), {mon: c * sign if sign < 0 else c})

    @staticmethod
    def from_terms(terms: Dict[Monomial, object]) -> "Form":
        degrees = {len(m) for m, c in terms.items() if c}
        if not degrees:
            return Form.zero()
        if len(degrees) > 1:
            raise ValueError(f"mixed-degree form: degrees {sorted(degrees)}")
        return Form(degrees.pop(), dict(terms))

    # -- basic predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, ranks: Iterable[int]):
        sorted_ = sort_ranks(ranks)
        if sorted_ is None:
            return ComplexRational(0)
        sign, mon = sorted_
        c = self.terms.get(mon)
        if c is None:
            return ComplexRational(0)
        return c if sign > 0 else -c

    # -- linear structure ----------------------------------------------------

    def _check_degree(self, other: "Form") -> Optional[int]:
        if self.is_zero:
            return other.degree
        if other.is_zero:
            return self.degree
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        return self.degree

    def __add__(self, other: "Form") -> "Form":
        degree = self._check_degree(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            terms[m] = c if acc is None else acc + c
        return Form(degree, terms)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __neg__(self) -> "Form":
        return Form(self.degree, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Form":
        if not c:
            return Form.zero()
        return Form(self.degree, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, c) -> "Form":
        return self.scale(c)

    __rmul__ = __mul__

    def __xor__(self, other: "Form") -> "Form":
        return wedge(self, other)

    def map_coefficients(self, fn: Callable) -> "Form":
        return Form(self.degree, {m: fn(c) for m, c in self.terms.items()})

    # -- complex-frame operations --------------------------------------------

    def conjugate(self) -> "Form":
        out: Dict[Monomial, object] = {}
        for mon, c in self.terms.items():
            sorted_ = sort_ranks(conjugate_rank(r) for r in mon)
            assert sorted_ is not None
            sign, mm = sorted_
            cc = c.conjugate() if sign > 0 else -c.conjugate()
            acc = out.get(mm)
            out[mm] = cc if acc is None else acc + cc
        return Form(self.degree, out)

    @staticmethod
    def monomial_bidegree(mon: Monomial) -> Tuple[int, int]:
        p = sum(1 for r in mon if r & 1)
        return p, len(mon) - p

    def bidegree_parts(self) -> Dict[Tuple[int, int], "Form"]:
        """Split into pure-(p,q) components; they sum back to the form."""
        buckets: Dict[Tuple[int, int], Dict[Monomial, object]] = {}
        for mon, c in self.terms.items():
            buckets.setdefault(self.monomial_bidegree(mon), {})[mon] = c
        return {pq: Form(self.degree, t) for pq, t in buckets.items()}

    def component(self, p: int, q: int) -> "Form":
        terms = {
            m: c for m, c in self.terms.items() if self.monomial_bidegree(m) == (p, q)
        }
        return Form(p + q if terms else None, terms)

    def max_rank(self) -> int:
        return max((m[-1] for m in self.terms if m), default=0)

    # -- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        return format_form(self)


def wedge(a: Form, b: Form) -> Form:
    """Exterior product; bilinear, associative, graded-commutative."""
    if a.is_zero or b.is_zero:
        return Form.zero()
    terms: Dict[Monomial, object] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            merged = merge_ranks(ma, mb)
            if merged is None:
                continue
            sign, mon = merged
            c = ca * cb
            if sign < 0:
                c = -c
            acc = terms.get(mon)
            terms[mon] = c if acc is None else acc + c
    return Form(a.degree + b.degree, terms)


def wedge_all(factors: Iterable[Form]) -> Form:
    out = Form.scalar(1)
    for f in factors:
        out = wedge(out, f)
        if out.is_zero:
            return out
    return out


def substitute(f: Form, table: Dict[int, Form]) -> Form:
    """Replace every generator rank by the 1-form table[rank] and expand."""
    if f.is_zero:
        return Form.zero()
    out = Form.zero()
    for mon, c in f.terms.items():
        prod = Form.scalar(1)
        for r in mon:
            prod = wedge(prod, table[r])
            if prod.is_zero:
                break
        out = out + prod.scale(c)
    return out


def format_form(f: Form, token: Callable = rank_token) -> str:
    """Render a form as DSL-compatible text: 'w1^w2 + (1/2+1/4i)*w2^~w2'."""
    if f.is_zero:
        return "0"
    parts = []
    for mon in sorted(f.terms):
        c = f.terms[mon]
        body = "^".join(token(r) for r in mon) if mon else "1"
        if mon and isinstance(c, ComplexRational) and c == 1:
            parts.append(body)
        elif not mon:
            parts.append(f"({format_complex(c)})")
        else:
            parts.append(f"({format_complex(c)})*{body}")
    return " + ".join(parts)


def format_real_form(f: Form) -> str:
    """Render a form over a real coframe with e-tokens: '(2)*e1^e4'."""
    return format_form(f, token=lambda r: f"e{r}")
