"""Exception hierarchy shared by the library and the CLI."""


class CopositivityError(Exception):
    """Base class for all errors raised by copocert."""


class DimensionMismatchError(CopositivityError, ValueError):
    pass


class DimensionLimitError(CopositivityError):
    """Input dimension exceeds the configured enumeration limit."""


class DomainError(CopositivityError, ValueError):
    """A vector lies outside the region an operation is defined on."""


class ComplementarityError(CopositivityError):
    """A solution violates x_i*u_i = 0 or y_i*v_i = 0."""


class InfeasibleError(CopositivityError):
    """A vector does not satisfy A s = b, s >= 0."""


class NoBasisError(CopositivityError):
    pass


class CopositiveInputError(CopositivityError):
    """Raised when a certificate is requested for a copositive matrix."""


class NotRepresentableError(CopositivityError, ValueError):
    """A coordinate does not lie on the declared rounding grid."""


class CertificateFailure(CopositivityError, AssertionError):
    """The constructed certificate did not evaluate negative.

    Cannot happen for correct inputs; signals a bug if ever raised.
    """


class ParseError(CopositivityError, ValueError):
    pass
