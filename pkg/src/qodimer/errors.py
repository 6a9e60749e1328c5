"""Exception types shared across the package."""


class QodimerError(Exception):
    """Base class for all package errors."""


class DomainError(QodimerError):
    """A physical parameter is outside its allowed domain."""


class StabilityError(QodimerError):
    """Mode-mode coupling too strong: a normal-mode frequency would not be positive."""


class UnknownLabel(QodimerError):
    """Coherence label is not one of the 4x4 basis-pair labels."""


class CutoffTooSmall(QodimerError):
    """Fock-space truncation cannot represent the requested state or spectrum."""


class StepTooLarge(QodimerError):
    """Fixed-step integrator failed its local accuracy audit."""


class InvalidState(QodimerError):
    """Matrix handed to a state diagnostic is not an admissible density matrix."""


class ConfigError(QodimerError):
    """Run configuration is malformed (unknown key, bad value, bad grid)."""
