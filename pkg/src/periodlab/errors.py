"""Exception taxonomy shared by the verification modules."""


class PeriodLabError(Exception):
    """Base class for all package errors."""


# -- field towers -----------------------------------------------------------

class NotTotallyImaginary(PeriodLabError):
    """A declared CM step fails its reality/imaginarity check numerically."""


class ReduciblePolynomial(PeriodLabError):
    """Extension polynomial has coincident roots at working precision."""


class PrecisionExhausted(PeriodLabError):
    """Numerics too coarse to separate or match embeddings."""


class ReconstructionFailed(PeriodLabError):
    """A numeric value is not near a small-height rational."""


class NotRational(ReconstructionFailed):
    """The constant in the discriminant identity failed reconstruction."""


class UnsupportedTower(PeriodLabError):
    """Exact element arithmetic requested outside the rational-base case."""


class InvalidGaloisPermutation(PeriodLabError):
    """Permutation does not commute with conjugation or does not descend."""


# -- weights ---------------------------------------------------------------

class NonDominant(PeriodLabError):
    """Weight entries are not weakly decreasing."""


class NotRegularAlgebraic(PeriodLabError):
    """eta value strictly between 0 and n where a two-sided value is needed."""


class InconsistentSum(PeriodLabError):
    """eta_i + eta_ibar varies across conjugate pairs."""


class AmbiguousSign(PeriodLabError):
    """Archimedean sign undefined: eta strictly between 0 and n."""


# -- Weyl/Kostant ------------------------------------------------------------

class UniquenessFailed(PeriodLabError):
    """Scan found zero or several Weyl elements matching the torus weight."""


# -- L-factors ---------------------------------------------------------------

class PoleHit(PeriodLabError):
    """Gamma shift ratio evaluated at a pole."""


class NotEntire(PeriodLabError):
    """Normalization requested for a token that is not flagged entire."""


# -- intertwining ------------------------------------------------------------

class SingularMatrix(PeriodLabError):
    """Section evaluated at a non-invertible matrix."""


class DivergentSeries(PeriodLabError):
    """Shell sum probed outside its region of absolute convergence."""


class ConvergenceRegionViolated(PeriodLabError):
    """Archimedean integral requested outside the enforced region."""


class QuadratureNotConverged(PeriodLabError):
    """Adaptive quadrature could not reach the requested tolerance."""


class AuditFailed(PeriodLabError):
    """A constant-term term retains a pole, or the branch flags disagree."""


# -- CLI ---------------------------------------------------------------------

class ConfigError(PeriodLabError):
    """Malformed or inconsistent run configuration."""
