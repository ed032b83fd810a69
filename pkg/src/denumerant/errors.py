"""Exception hierarchy shared by every denumerant module."""


class DenumerantError(Exception):
    """Base class for all library errors."""
    pass


class EmptyPartSet(DenumerantError, ValueError):
    """A part set must contain at least one part."""
    pass


class NonCoprime(DenumerantError, ValueError):
    """The operation requires coprime parts."""
    pass


class WrongArity(DenumerantError, ValueError):
    """The operation requires a part set of a specific size."""
    pass


class InconsistentPoints(DenumerantError):
    """Surplus interpolation points do not lie on the interpolating polynomial."""
    pass


class DuplicateAbscissa(DenumerantError, ValueError):
    """Two interpolation points share an x coordinate."""
    pass


class ZeroPolynomial(DenumerantError, ValueError):
    """The zero polynomial was passed where a nonzero one is required."""
    pass


class DegreeUnsupported(DenumerantError):
    """Polynomial degree outside the supported range."""
    pass


class NonIntegerCoefficients(DenumerantError):
    """Coefficients are required to be integers."""
    pass


class NotPolynomial(DenumerantError):
    """Sampled values do not follow a single polynomial."""
    pass


class SquareD(DenumerantError, ValueError):
    """Pell equations need a nonsquare D."""
    pass


class NotHyperbolic(DenumerantError):
    """The conic does not reduce to a generalized Pell equation."""
    pass


class NoSolutionFound(DenumerantError):
    """Bounded search found nothing. This is inconclusive, not a proof."""
    pass


class HypothesisViolated(DenumerantError):
    """Parameters fall outside the hypotheses of a construction."""
    pass


class VerificationFailed(DenumerantError):
    """An emitted solution failed the exact value check."""
    pass


class BudgetExceeded(DenumerantError):
    """Requested bounds exceed the configured search budget."""
    pass


class UnknownSelection(DenumerantError):
    """A verification suite tag or registry key does not exist."""
    pass
