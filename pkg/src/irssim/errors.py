"""Exception types shared across the simulator."""


class SimulatorError(Exception):
    """Base class for all simulator errors."""


class InvalidInputError(SimulatorError, ValueError):
    """A scalar input violates its documented range or finiteness constraint."""


class DegenerateGeometryError(SimulatorError, ValueError):
    """A link geometry is singular (zero-length propagation leg)."""


class ConfigError(SimulatorError, ValueError):
    """A scenario configuration document is malformed or violates a constraint."""
