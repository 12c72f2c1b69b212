"""Exception types shared across the kinematics and planning layers."""


class YoshimuraError(Exception):
    """Base class for all package errors."""


class AdmissibilityError(YoshimuraError, ValueError):
    """Fold geometry impossible: sector angle below the flat-foldable bound."""


class NoSolutionError(YoshimuraError, ValueError):
    """Requested pop-out state is kinematically inadmissible for this design."""


class ConvergenceError(YoshimuraError, RuntimeError):
    """Root finder exhausted its iteration budget without meeting tolerance."""


class UnsupportedError(YoshimuraError, ValueError):
    """Operation is only derived for n = 3 module rings."""


class ResourceLimitError(YoshimuraError, RuntimeError):
    """Enumeration would exceed the configured state-count cap."""


class EmptyTargetError(YoshimuraError, ValueError):
    """Shape-matching target carries no usable information."""


class EmptyConfigurationError(YoshimuraError, ValueError):
    """A boom needs at least one module."""
