"""Exception types shared across the library."""


class GeocrossError(Exception):
    """Base class for all library errors."""


class RepresentationMismatch(GeocrossError):
    """Operands come from different representation spaces (length, k, size...)."""


class CapacityError(GeocrossError):
    """An exhaustive enumeration would exceed its configured bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (bound: {bound})")
        self.bound = bound


class ConfigError(GeocrossError):
    """A run configuration is invalid; `field` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
