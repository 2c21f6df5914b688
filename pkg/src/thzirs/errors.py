"""Exception types shared across the simulator.

Each class marks a distinct failure mode so callers and tests can tell
bad arguments apart from bad geometry or bad runtime state.
"""


class ThzirsError(Exception):
    """Base class for all simulator errors."""


class InvalidParameterError(ThzirsError, ValueError):
    """An argument is out of range or inconsistent with the others."""


class DegenerateGeometryError(ThzirsError, ValueError):
    """Positions or orientations that leave angles or frames undefined,
    or that violate the far-field assumption."""


class UnsupportedStructureError(ThzirsError, ValueError):
    """An operation that the given precoder hardware structure cannot realize."""


class SingularChannelError(ThzirsError, ValueError):
    """Channel matrix is rank deficient; digital weights are undefined."""


class NotConfiguredError(ThzirsError, RuntimeError):
    """A stateful object (e.g. an IRS without phases) was used before setup."""


class ConfigError(ThzirsError, ValueError):
    """Scenario configuration failed validation; message names the field."""
