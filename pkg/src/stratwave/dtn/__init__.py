"""Interface operators: exact flat-state multipliers, the numeric strip
solver, and the shallow-water expansion kernels."""

from .expansions import (
    expand_g1,
    expand_g2,
    expand_h,
    layer_mean_correction,
    t_operator,
)
from .flat import g1_flat, g2_flat, h_flat
from .strip import (
    StripOperator,
    StripSolution,
    lower_operator,
    mean_velocity,
    solve_lower,
    solve_upper,
    upper_operator,
)

__all__ = [
    "StripOperator",
    "StripSolution",
    "expand_g1",
    "expand_g2",
    "expand_h",
    "g1_flat",
    "g2_flat",
    "h_flat",
    "layer_mean_correction",
    "lower_operator",
    "mean_velocity",
    "solve_lower",
    "solve_upper",
    "t_operator",
    "upper_operator",
]
