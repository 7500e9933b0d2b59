"""Exception types raised across the package."""


class ProdFormError(ValueError):
    """Base class for all errors raised by prodform."""


class NotHermitian(ProdFormError):
    pass


class NotUnitary(ProdFormError):
    pass


class DimensionMismatch(ProdFormError):
    pass


class ScheduleViolation(ProdFormError):
    """The coupling schedule breaks the K_n = o(n) hypothesis at some n."""


class ResonantPhases(ProdFormError):
    pass


class DegenerateAngle(ProdFormError):
    pass


class InsufficientPoints(ProdFormError):
    pass


class NonpositiveValues(ProdFormError):
    pass


class ConfigError(ProdFormError):
    pass
