"""Exception hierarchy shared across the package."""

from __future__ import annotations


class GauduchonError(Exception):
    """Base class for all library errors."""


class DslSyntaxError(GauduchonError):
    """Malformed structure-equation source.  Carries 1-based line and column."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class JacobiViolation(GauduchonError):
    """d^2 != 0 on some generator; `residual` is the offending 3-form."""

    def __init__(self, generator: int, residual):
        super().__init__(f"d^2 != 0 on generator {generator}: residual {residual}")
        self.generator = generator
        self.residual = residual


class NotIntegrable(GauduchonError):
    """dw^j has a (0,2)-component, so d does not split as del + delbar."""

    def __init__(self, generator: int, residual):
        super().__init__(
            f"generator {generator} has (0,2)-component {residual}; "
            "the almost complex structure is not integrable"
        )
        self.generator = generator
        self.residual = residual


class NotAlmostComplex(GauduchonError):
    """J^2 != -Id (or J missing where one is required)."""


class DimensionMismatch(GauduchonError):
    """Form built over a different coframe than the structure equations."""


class NotSkewHermitian(GauduchonError):
    """Metric coefficient matrix fails conj(x_{kj}) = -x_{jk}."""


class NotPositive(GauduchonError):
    """Metric coefficient matrix is not positive definite."""


class BadK(GauduchonError):
    """k outside 1..n-1 for a k-th Gauduchon computation."""


class UnknownFamily(GauduchonError):
    """Catalog lookup with an unrecognized family name."""


class BadParams(GauduchonError):
    """Parameters outside the domain of a catalog family or closed form."""


class BadRange(GauduchonError):
    """Index outside the valid range of a coefficient table."""


class BadDimensions(GauduchonError):
    """Factor dimensions outside the domain of a product construction."""


class BadT(GauduchonError):
    """Deformation parameter t outside (0, 1]."""


class NotQuasiSasakian(GauduchonError):
    """Contact data fails one of the quasi-Sasakian compatibility checks."""
