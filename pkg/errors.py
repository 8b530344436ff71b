# errors.py

class SahError(ValueError):
    """Base class for every error the library raises on bad input."""
    exit_code = 3


class UsageError(SahError):
    exit_code = 2


class AmbientMismatchError(SahError):
    pass


class ContainmentError(SahError):
    pass


class DegeneracyError(SahError):
    pass


class OrthogonalityError(SahError):
    pass


class LatticeError(SahError):
    pass


class ComplexTooLargeError(SahError):
    pass


class GeometryError(SahError):
    pass


class PrecisionError(SahError):
    pass
