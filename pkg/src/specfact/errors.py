"""Exception hierarchy.

Validation errors flag inputs that violate a documented precondition;
numerical errors flag computations that failed or lost too much accuracy.
The command line maps the former to exit code 2 and the latter to 3.
"""


class SpecfactError(Exception):
    pass


class ValidationError(SpecfactError):
    """Input rejected before any real computation started."""


class NumericalError(SpecfactError):
    """Computation started but could not be completed reliably."""


class NotRealValued(ValidationError):
    """Coefficients lack the conjugate reflection symmetry of a real function."""


class NotNonnegative(ValidationError):
    """Weight dips below zero beyond tolerance on the check grid."""


class DegenerateLeadingCoeff(ValidationError):
    """Top coefficient too small to anchor a root-based factorization."""


class AllCoefficientsZero(ValidationError):
    pass


class ZeroFunction(ValidationError):
    pass


class SpectrumNotOneSided(ValidationError):
    """Frequencies extend below zero where a one-sided spectrum is required."""


class ZeroMeanFactor(ValidationError):
    """Factor has no zero-frequency component, so no centered shift exists."""


class FrequencyCollision(ValidationError):
    """Two lattice points land on the same real frequency; slope too close to rational."""


class OddBoundaryCluster(NumericalError):
    """Roots near the unit circle cannot be matched into reflection pairs."""


class SingularToeplitz(NumericalError):
    """Reflection coefficient reached modulus one; moment matrix numerically singular."""


class NonpositiveStage(NumericalError):
    """A ladder stage is not strictly positive on the grid; regularize first."""


class GridTooCoarse(NumericalError):
    """Spectral energy near the Nyquist bins says the grid undersamples the data."""


class ZeroOnContour(NumericalError):
    """Contour passes too close to a zero for a trustworthy winding number."""


class NonpolynomialInner(NumericalError):
    """Inner factor is a genuine Blaschke quotient, not a polynomial."""
