"""Exception types shared across the package."""


class StratwaveError(Exception):
    """Base class for all stratwave errors."""


class ConfigError(StratwaveError):
    """Invalid configuration, parameters, or field layout."""


class ConnectednessViolation(StratwaveError):
    """A layer thickness dropped to (or below) the admissible floor."""


class NonFiniteMultiplier(StratwaveError):
    """A Fourier multiplier evaluated to NaN/inf at a grid wavenumber."""


class SolverDivergence(StratwaveError):
    """Linear-system residual of an elliptic solve exceeded tolerance."""


class NoRealRoots(StratwaveError):
    """The dispersion quadratic has no pair of positive roots (gamma >= 1)."""


class IllPosedAt(StratwaveError):
    """Model dispersion loses real positive roots at a wavenumber."""

    def __init__(self, k, message=None):
        self.k = float(k)
        super().__init__(message or f"linearly ill-posed at k = {self.k:g}")


class OptimizationFailed(StratwaveError):
    """No well-posed coefficient set found in the search box."""


class DegenerateAlpha(StratwaveError):
    """alpha = 0 (rigid lid): the free-surface equations degenerate."""


class HyperbolicityLoss(StratwaveError):
    """Symmetrizability assumptions fail at the current state."""


class SingularTimeOperator(StratwaveError):
    """The Fourier-symbol matrix of a time operator is singular at a mode."""

    def __init__(self, k, message=None):
        self.k = float(k)
        super().__init__(message or f"singular time operator at |k| = {self.k:g}")


class CoefficientDegenerate(StratwaveError):
    """Elliptic coefficient 1 + zeta is not positive everywhere."""


class NoConvergence(StratwaveError):
    """Iterative solver failed to reach tolerance."""


class StepTooLarge(StratwaveError):
    """Time finite difference failed its Richardson accuracy check."""
