"""Exception hierarchy.

Configuration problems (bad priors, cost out of range, malformed garblings)
are distinguished from numeric/solver failures so the CLI can map them to
different exit codes.
"""


class RobustMenuError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(RobustMenuError):
    """Invalid market configuration or user input."""


class EmptySupport(ConfigError):
    """A signal label receives zero total probability."""


class CostOutOfRange(ConfigError):
    """Production cost is not in [theta_K, theta_1) after reduction."""


class InvalidGarbling(ConfigError):
    """Garbling matrix rows do not form probability distributions."""


class GridOutOfRange(ConfigError):
    """A sweep grid leaves the admissible parameter range."""


class NumericError(RobustMenuError):
    """A numeric routine failed or an internal cross-check disagreed."""


class NoEquilibrium(NumericError):
    """No pure-strategy equilibrium found (discretization artifact)."""


class Stuck(NumericError):
    """Path finding found no upward-deviating type before reaching the
    worst-case revenue."""


class BudgetExceeded(RobustMenuError):
    """Enumeration would exceed the candidate-profile budget."""


class QuantileOutOfRange(RobustMenuError):
    """Quantile argument outside the path's ex-ante probability range."""


class UndefinedAtFullDisclosure(RobustMenuError):
    """Gradient requested at the all-ones disclosure profile."""


class PastTippingPoint(RobustMenuError):
    """Closed-form price/rent requested beyond the tipping point."""


class NotBinary(RobustMenuError):
    """Binary closed form requested for a non-binary market."""


class EpsilonTooLarge(RobustMenuError):
    """Price discount would drive some positive-probability plan negative."""


class PlanNotInMenu(RobustMenuError):
    """A contingent choice refers to a plan absent from its menu."""


class InefficientDirection(RobustMenuError):
    """A path stride moves an inefficient type."""


class NotExchangeable(RobustMenuError):
    """The two consecutive path steps are not in low-before-high order."""


class AssumptionViolated(RobustMenuError):
    """Rationalizability requires the menus of at-cost types to be trivial."""
