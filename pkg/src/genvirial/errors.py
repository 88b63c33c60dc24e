"""Exception hierarchy shared by all modules."""


class GenVirialError(Exception):
    """Base class for library errors."""


class DomainError(GenVirialError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedOrderError(DomainError):
    """Requested derivative or moment order is not implemented."""


class NoBoundStateError(GenVirialError):
    """Node-count bracketing failed to find the requested bound state."""


class ConvergenceError(GenVirialError):
    """An iterative procedure did not converge within its iteration budget."""


class NoOrbitError(GenVirialError):
    """No bounded classical orbit exists for the requested energy and l^2."""


class ConfigError(GenVirialError, ValueError):
    """Invalid CLI configuration."""
