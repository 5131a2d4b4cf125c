"""The full verification suite: every route against every other.

verify_model runs, for one step set, the identity checks, the oracle
comparisons, the route agreements and (when a known preset is being
verified) the closed-form catalog comparisons, and returns a single
Report.  The CLI's verify command is a thin wrapper over this module.
"""

from __future__ import annotations

from .checks import Report
from .closed_forms import (
    diagonal_axis_point_count,
    diagonal_loop_count,
    halfplane_axis_count,
    narayana,
    spider_endpoint_count,
    spider_min_abscissa,
    square_axis_point_count,
    square_bilateral_closed,
    square_loop_count,
    square_point01_count,
    triangular_loop_series,
)
from .factorization import verify_factorization
from .lattice import within_step_box
from .series import first_difference
from .solver import (
    axis_series_by_recursion,
    check_bridge_identities,
    check_half_plane,
    check_oracle_walks,
    check_splice_identities,
    cycle_lemma_series,
    row_series,
    solve,
    solve_half_plane,
    solve_small_height,
)


def integral_nonnegative(series):
    """True when every stored coefficient is a nonnegative integer."""
    for p in series.coeffs:
        for c in p.coeffs.values():
            if not isinstance(c, int) or c < 0:
                return False
    return True


def verify_model(steps, order, oracle_order=None, recursion_depth=3):
    """Run the whole identity-and-oracle suite for one step set."""
    if oracle_order is None:
        oracle_order = min(order, 10)
    report = Report()
    sol = solve(steps, order)
    report.add("bilateral-route-agreement", True,
               detail="kernel route and DP route agree (checked in solve)")
    report.extend(verify_factorization(sol.bilateral, sol.factors))
    report.extend(check_splice_identities(steps, order, solution=sol))
    report.extend(check_bridge_identities(steps, order, oracle_order, solution=sol))
    report.extend(check_oracle_walks(steps, order, oracle_order, solution=sol))

    p = sol.min_abscissa
    if p is not None:
        report.add_series_equal(
            "cycle-route",
            cycle_lemma_series(steps, order),
            sol.axis_walks.extract_x(p),
            detail=f"minimal axis abscissa p = {p}",
        )
        depth = max(recursion_depth, p)
        recursed = axis_series_by_recursion(steps, depth, order)
        bad = None
        for i, series in enumerate(recursed, start=1):
            n = first_difference(series, sol.axis_walks.extract_x(i))
            if n is not None:
                bad = n
                break
        report.add("recursion-route", bad is None, bad,
                   f"composition recursion agrees for i = 1..{depth}")
    else:
        report.add("cycle-route", True,
                   detail="no axis endpoint within this order; route skipped")

    if steps.is_small_height():
        data, small = solve_small_height(steps, order)
        report.add_series_equal("small-height-loops", small.loops, sol.loops)
        report.add_series_equal("small-height-axis-walks",
                                small.axis_walks, sol.axis_walks)
        report.add_series_equal("small-height-walks", small.walks, sol.walks)
        report.add_series_equal("small-height-bridges", small.bridges, sol.bridges)
        bad = None
        for j in range(-2, 3):
            n = first_difference(row_series(data, j, solution=sol),
                                 sol.walks.extract_y(j))
            if n is not None:
                bad = n
                break
        report.add("row-series-route", bad is None, bad,
                   "ratio formula matches y-extraction for |j| <= 2")

    for name, series in (("loops", sol.loops), ("axis-walks", sol.axis_walks),
                         ("walks", sol.walks), ("bridges", sol.bridges)):
        report.add(f"integrality-{name}", integral_nonnegative(series))
    report.add("walks-step-box", within_step_box(sol.walks, steps))

    _preset_formula_checks(report, steps, sol, order)
    return report


def _preset_formula_checks(report, steps, sol, order):
    name = steps.name or ""
    if name == "square":
        s10 = sol.axis_walks.extract_x(1).scalars()
        want = [(2 * n + 1, square_axis_point_count(n))
                for n in range((order - 1) // 2 + 1)]
        bad = next((n for n, v in want if s10[n] != v), None)
        report.add("square-catalan-axis", bad is None, bad,
                   "walks to (1,0) counted by Catalan numbers")
        a01 = sol.walks.extract_y(1).extract_x(0).scalars()
        want = [(2 * n + 1, square_point01_count(n))
                for n in range((order - 1) // 2 + 1)]
        bad = next((n for n, v in want if a01[n] != v), None)
        report.add("square-point01", bad is None, bad,
                   "walks to (0,1) counted by 4^n C_n")
        loops = sol.loops.scalars()
        want = [(2 * n, square_loop_count(n)) for n in range(order // 2 + 1)]
        bad = next((n for n, v in want if loops[n] != v), None)
        report.add("square-loop-formula", bad is None, bad)
        report.add_series_equal("square-bilateral-closed-form",
                                sol.bilateral, square_bilateral_closed(order))
    elif name == "diagonal":
        s20 = sol.axis_walks.extract_x(2).scalars()
        want = [(2 * n, diagonal_axis_point_count(n))
                for n in range(1, order // 2 + 1)]
        bad = next((n for n, v in want if s20[n] != v), None)
        report.add("diagonal-axis-formula", bad is None, bad,
                   "walks to (2,0) counted by 4^n C_n / 2")
        loops = sol.loops.scalars()
        want = [(2 * n, diagonal_loop_count(n)) for n in range(order // 2 + 1)]
        bad = next((n for n, v in want if loops[n] != v), None)
        report.add("diagonal-loop-formula", bad is None, bad)
        bad = None
        for n in range(1, order // 2 + 1):
            if sum(narayana(n, m) for m in range(1, n + 1)) != diagonal_axis_point_count(n):
                bad = n
                break
        report.add("narayana-row-sums", bad is None, bad)
    elif name == "triangular":
        report.add_series_equal("triangular-loop-fixed-point",
                                sol.loops, triangular_loop_series(order))
    elif name.startswith("spider:"):
        k = int(name.split(":")[1])
        if k >= 2:
            p = spider_min_abscissa(k)
            report.add("spider-min-abscissa", sol.min_abscissa == p,
                       detail=f"expected p = {p}")
            series = sol.axis_walks.extract_x(p).scalars()
            bad = None
            for n in range(1, order + 1):
                if n % (k + 1) or (k % 2 == 0 and n % 2 == 0):
                    continue
                if series[n] != spider_endpoint_count(k, n):
                    bad = n
                    break
            report.add("spider-endpoint-formula", bad is None, bad)


def verify_half_plane_model(order, oracle_order=None):
    """Verification suite for the upper-half-plane square-lattice model."""
    report = check_half_plane(order, oracle_order)
    sol = solve_half_plane(order)
    s10 = sol.axis_walks.extract_x(1).scalars()
    bad = None
    for n in range((order - 1) // 2 + 1):
        if s10[2 * n + 1] != halfplane_axis_count(n):
            bad = 2 * n + 1
            break
    report.add("half-plane-axis-formula", bad is None, bad,
               "walks to (1,0) counted by binom(2n+1,n)^2/(2n+1)")
    for name, series in (("loops", sol.loops), ("axis-walks", sol.axis_walks),
                         ("walks", sol.walks)):
        report.add(f"integrality-{name}", integral_nonnegative(series))
    return report
