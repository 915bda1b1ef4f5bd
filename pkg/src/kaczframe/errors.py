"""Exception hierarchy shared by every module."""


class KaczframeError(Exception):
    """Base class for all library errors."""


class NonHermitian(KaczframeError, ValueError):
    pass


class NoConvergence(KaczframeError, ArithmeticError):
    pass


class ShapeMismatch(KaczframeError, ValueError):
    pass


class InvalidShape(KaczframeError, ValueError):
    pass


class NonFinite(KaczframeError, ValueError):
    pass


class NotUnitNorm(KaczframeError, ValueError):
    def __init__(self, index, norm):
        super().__init__(f"vector {index} has norm {norm!r}, expected 1")
        self.index = index
        self.norm = norm


class ZeroRow(KaczframeError, ValueError):
    def __init__(self, index):
        super().__init__(f"row {index} is zero")
        self.index = index


class IndexOutOfRange(KaczframeError, IndexError):
    pass


class NotSpanning(KaczframeError, ValueError):
    pass


class NotFrame(KaczframeError, ValueError):
    pass


class C1Unavailable(KaczframeError, ValueError):
    """Hermitian part of C is not positive definite, so the residual bound is undefined."""

    def __init__(self, a1, a2, c1_min):
        super().__init__(
            f"Hermitian part of C has minimum eigenvalue {c1_min:.3e} <= 0; bound unavailable"
        )
        self.a1 = a1
        self.a2 = a2
        self.c1_min = c1_min


class ParseError(KaczframeError, ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class UnsupportedFormat(KaczframeError, ValueError):
    pass
