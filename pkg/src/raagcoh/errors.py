class RaagcohError(Exception):
    """Base class for domain errors raised by this package."""


class GraphFormatError(RaagcohError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionError(RaagcohError, ValueError):
    pass


class MalformedAlgebraError(RaagcohError, ValueError):
    """The input algebra is not the cup-product algebra of any graph."""


class EnumerationCapError(RaagcohError):
    def __init__(self, required, cap):
        self.required = required
        self.cap = cap
        super().__init__(
            f"projective enumeration needs {required} classes, cap is {cap}"
        )


class VerificationError(RaagcohError, AssertionError):
    """Internal consistency check failed. Should never happen."""


class SingularMatrixError(RaagcohError, ValueError):
    pass
