"""Exception types shared across the package."""


class TritorsionError(Exception):
    """Base class for all package errors."""


class NotASquare(TritorsionError):
    """Square root does not exist within the allowed tower depth."""


class TowerDepthExceeded(TritorsionError):
    """An operation would need a tower of more than two square roots."""


class ZeroSeries(TritorsionError):
    """A Laurent series is zero to its truncation where a unit is required."""


class PrecisionExhausted(TritorsionError):
    """A series result has no significant terms left at the tracked truncation."""


class SingularCurve(TritorsionError):
    """Curve data with vanishing discriminant."""


class DegenerateLambda(TritorsionError):
    """Legendre parameter in {0, 1}."""


class PointNotOnCurve(TritorsionError):
    """Affine coordinates do not satisfy the curve equation."""


class ZeroTwist(TritorsionError):
    """Twist scalar w must be nonzero."""


class RootsNotInTower(TritorsionError):
    """The cubic's roots are not reachable inside a depth-2 quadratic tower."""


class BudgetExceeded(TritorsionError):
    """A configured degree/size budget would be exceeded."""


class KernelElement(TritorsionError):
    """Uniformizer argument lies in the kernel q**Z of the Tate parametrization."""


class NotNormalized(TritorsionError):
    """Tate point representative is not normalized to 0 <= v(u) < v(q)."""


class NotIntegralModel(TritorsionError):
    """Local computation requires v-integral model coordinates."""


class RamifiedTwist(TritorsionError):
    """The twist scalar w lives only in a (ramified) quadratic extension of the completion."""


class NotOnIdentityComponent(TritorsionError):
    """Local height formula is only valid on the identity component."""


class IdentityPoint(TritorsionError):
    """Operation undefined at the group identity."""


class MultiplierNotFound(TritorsionError):
    """No multiplier m <= 12 moves the point onto the identity component everywhere."""


class PrecisionLoss(TritorsionError):
    """Shadow evaluation disagrees with the primary beyond the predicted error."""


class AmbiguousTolerance(TritorsionError):
    """Rationality detection tolerance is too coarse for the denominator."""
