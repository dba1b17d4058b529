"""Exception types shared across modules."""


class InsufficientDepthError(RuntimeError):
    """Upper/combined adjacency at level k was requested from a complex built
    without level k+1; computing it would silently understate adjacency."""


class NonConvergenceError(RuntimeError):
    """An iterative numeric routine failed to converge."""
