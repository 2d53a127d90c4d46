"""Exact analysis on the one-sided full shift: difference operators, Dirichlet
forms, effective resistance, the Green kernel and boundary value problems.

All values cross the boundary as exact rational strings ("p/q"); points as
"<prefix>~<tail>" strings, e.g. "12~1" for the point starting 1,2 and repeating 1.
"""

from ._core import (
    __version__,
    connecting_chain,
    dense_operator,
    dirichlet_form,
    distance,
    effective_resistance,
    energy_trace,
    enumerate_level,
    green_apply_level,
    green_value,
    inverse_branch,
    neighbours,
    rho,
    shift,
    solve_bvp_eval,
    structural_check,
    unit_green_trace,
)

__all__ = [
    "__version__",
    "connecting_chain",
    "dense_operator",
    "dirichlet_form",
    "distance",
    "effective_resistance",
    "energy_trace",
    "enumerate_level",
    "green_apply_level",
    "green_value",
    "inverse_branch",
    "neighbours",
    "rho",
    "shift",
    "solve_bvp_eval",
    "structural_check",
    "unit_green_trace",
]
