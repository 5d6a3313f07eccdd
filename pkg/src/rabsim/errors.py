"""Exception types shared across the package."""


class RabsimError(Exception):
    """Base class for all rabsim errors."""


class ConfigurationError(RabsimError, ValueError):
    """A parameter set, profile, or config document is invalid.

    Subclasses ValueError so callers that catch the builtin still work.
    """


class SchemaValidationError(ConfigurationError):
    """A JSON document failed schema validation.

    ``json_path`` points at the offending field (JSON-pointer-ish, e.g.
    ``mission.comm_power_w``).
    """

    def __init__(self, message: str, json_path: str = ""):
        super().__init__(message)
        self.json_path = json_path


class InfeasibleTargetError(RabsimError):
    """A cruise-speed inference target is outside the achievable energy range."""

    def __init__(self, message: str, target_j: float, min_achievable_j: float):
        super().__init__(message)
        self.target_j = target_j
        self.min_achievable_j = min_achievable_j


class CalibrationInfeasibleError(RabsimError):
    """An observed hover power cannot be matched (induced power alone exceeds it)."""

    def __init__(self, message: str, observed_w: float, induced_w: float):
        super().__init__(message)
        self.observed_w = observed_w
        self.induced_w = induced_w


class PlanValidationError(ConfigurationError):
    """A plan instance or assignment references bad ids or breaks matching rules."""


class PlanSizeError(RabsimError):
    """An instance is too large for exhaustive enumeration."""
