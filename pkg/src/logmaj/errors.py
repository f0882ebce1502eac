"""Exception hierarchy for the logmaj package."""


class LogmajError(Exception):
    """Base class for all package-specific errors."""


class NonConvergence(LogmajError):
    """Eigensolver hit its sweep cap with off-diagonal mass above threshold."""


class SingularMatrix(LogmajError):
    """A negative or inverse power was requested of a singular matrix."""


class UnsupportedShape(LogmajError):
    """A matrix word admits no symmetric rearrangement with real spectrum."""


class NonConvergedLimit(LogmajError):
    """The epsilon-regularization ladder failed to stabilize."""


class LengthMismatch(LogmajError):
    """Spectra of different lengths were compared."""


class DimMismatch(LogmajError):
    """Matrices of different dimensions were combined."""


class InvalidP(LogmajError):
    """Schatten exponent below 1."""


class BadK(LogmajError):
    """Ky Fan index outside 1..n."""


class BadSpec(LogmajError):
    """Invalid random-matrix generation spec."""


class UnknownId(LogmajError):
    """Registry lookup of an id not in the catalog."""


class EmptyDomain(LogmajError):
    """Parameter sampling requested for an entry with no free parameters."""


class DomainViolation(LogmajError):
    """Parameters outside the entry's admissible domain."""


class WrongStatus(LogmajError):
    """Search requested on an entry that is not a search target."""


class ReproductionMismatch(LogmajError):
    """A reported instance failed to reproduce its recorded margin."""
