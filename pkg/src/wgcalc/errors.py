"""Exception types shared across the package."""


class WgError(Exception):
    """Base class for all wgcalc errors."""


class InvalidArgumentError(WgError, ValueError):
    """An argument violates an operation's preconditions."""


class UnsupportedScaleError(WgError):
    """The requested size is beyond what enumeration can handle."""


class NumericalFailureError(WgError):
    """Floating-point accumulation produced a non-finite value."""


class SamplerError(WgError):
    """A Haar sampler produced a matrix outside its structural tolerance."""
