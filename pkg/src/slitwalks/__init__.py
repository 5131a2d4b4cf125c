"""Exact enumeration of lattice walks on the slit plane.

The slit plane is the square lattice with the half-line of nonpositive
abscissae removed for every vertex of a walk after its starting point.
For an arbitrary finite step set this package computes, as exact
truncated series, the generating functions for slit-plane walks, loops,
bridges and bilateral walks, via the canonical factorization of the
bilateral-walk series, and verifies every result against brute-force
dynamic-programming counts and a catalog of closed forms.
"""

from .checks import Check, Report
from .factorization import Factorization, canonical_factorize, verify_factorization
from .lattice import (
    Constraint,
    CountTable,
    CrossCheckError,
    Domain,
    StepSet,
    bilateral_series,
    count_bridges,
    count_loops,
    count_refined,
    count_walks,
    kernel,
    reverse,
    step_polynomial,
    vertical_projection,
    within_step_box,
)
from .series import LaurentPoly, TSeries, first_difference, fixed_point
from .solver import (
    HalfPlaneSolution,
    SlitSolution,
    SmallHeightData,
    axis_series_by_recursion,
    check_bridge_identities,
    check_half_plane,
    check_oracle_walks,
    check_splice_identities,
    cycle_lemma_series,
    motzkin_series,
    row_series,
    small_height_data,
    solve,
    solve_half_plane,
    solve_small_height,
)
from .verify import integral_nonnegative, verify_half_plane_model, verify_model

__version__ = "0.1.0"

__all__ = [
    "Check",
    "Constraint",
    "CountTable",
    "CrossCheckError",
    "Domain",
    "Factorization",
    "HalfPlaneSolution",
    "LaurentPoly",
    "Report",
    "SlitSolution",
    "SmallHeightData",
    "StepSet",
    "TSeries",
    "axis_series_by_recursion",
    "bilateral_series",
    "canonical_factorize",
    "check_bridge_identities",
    "check_half_plane",
    "check_oracle_walks",
    "check_splice_identities",
    "count_bridges",
    "count_loops",
    "count_refined",
    "count_walks",
    "cycle_lemma_series",
    "first_difference",
    "fixed_point",
    "integral_nonnegative",
    "kernel",
    "motzkin_series",
    "reverse",
    "row_series",
    "small_height_data",
    "solve",
    "solve_half_plane",
    "solve_small_height",
    "step_polynomial",
    "verify_factorization",
    "verify_half_plane_model",
    "verify_model",
    "vertical_projection",
    "within_step_box",
]
