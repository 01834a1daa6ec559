"""
Exception hierarchy for softguess.

Every error raised by the library derives from SoftGuessError, which is a
ValueError so callers that already guard malformed input with
``except ValueError`` keep working. The ``exit_code`` attribute is what the
command-line front-end returns when the error escapes a command.
"""

from typing import Any, Dict, Optional


class SoftGuessError(ValueError):
    """Base class for all softguess errors (usage/domain, exit code 2)."""
    exit_code = 2


class EmptyInput(SoftGuessError):
    """A probability vector or matrix with no entries."""


class NotNormalized(SoftGuessError):
    """Probabilities do not sum to one within tolerance."""

    def __init__(self, total: float, atol: Optional[float] = None):
        self.total = total
        self.atol = atol
        msg = f"Probabilities sum to {total:.12g}, expected 1"
        if atol is not None:
            msg += f" (atol {atol:g})"
        super().__init__(msg)


class BadParameter(SoftGuessError):
    """A parameter outside its admissible range."""


class NegativeDistortion(BadParameter):
    """Distortion level D < 0."""


class OutOfDomain(BadParameter):
    """Argument outside the domain of a function (e.g. quantile at 0 or 1)."""


class DistortionAboveEntropy(BadParameter):
    """D is at or above the entropy, so the asymptotic exponent degenerates."""


# =============================================================================
# Resource budgets (exit code 3)
# =============================================================================

class ResourceBudgetError(SoftGuessError):
    """A computation would exceed a configured size budget."""
    exit_code = 3


class TooLarge(ResourceBudgetError):
    """Product alphabet or list walk larger than the configured budget."""

    def __init__(self, required: float, budget: int, what: str = "atoms"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"Refusing to build {required:.6g} {what}: budget is {budget}"
        )


class TooLargeForOracle(ResourceBudgetError):
    """The brute-force or grid oracle would enumerate too many candidates."""


# =============================================================================
# Property failures (exit code 1)
# =============================================================================

class PropertyViolation(SoftGuessError):
    """A checked inequality or invariant failed."""
    exit_code = 1


class SandwichViolation(PropertyViolation):
    """An exact value fell outside its lower/upper bounds."""

    def __init__(self, label: str, lower: float, value: float, upper: float):
        self.label = label
        self.lower = lower
        self.value = value
        self.upper = upper
        super().__init__(
            f"{label}: {value:.12g} not within [{lower:.12g}, {upper:.12g}]"
        )


class OptimizerNotConverged(PropertyViolation):
    """The allocation solver stopped above its improvement tolerance."""

    def __init__(self, report: Dict[str, Any]):
        self.report = dict(report)
        details = ", ".join(f"{k}={v}" for k, v in self.report.items())
        super().__init__(f"Allocation solver did not converge ({details})")
