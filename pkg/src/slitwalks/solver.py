"""Solvers for slit-plane walk models with an arbitrary step set.

The pipeline: the bilateral-walk series B(x; t) is elementary (a constant
term of the inverse kernel), and its canonical factorization
B = f0 * fplus * fminus delivers everything else at once:

    loops              L(t)     = f0
    axis slit walks    S0(x; t) = fplus
    all slit walks     S(x,y;t) = 1 / (K(x,y;t) * f0 * fminus)
    bridges            Omega    = 1 - 1 / (f0 * fminus)

Alongside the factorization route, this module implements the independent
routes that the theory provides -- the cycle-lemma extraction, the
composition recursion for walks ending at (i, 0), the square-root
formulas for step sets of small height variation, and the upper-half-plane
variant of the square lattice -- together with checkers that confront
every route with the others and with the brute-force DP counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .checks import Report
from .factorization import Factorization, canonical_factorize
from .lattice import (
    Constraint,
    Domain,
    StepSet,
    bilateral_series,
    count_bridges,
    count_loops,
    count_walks,
    kernel,
    vertical_projection,
)
from .series import LaurentPoly, TSeries, fixed_point


@dataclass
class SlitSolution:
    """Everything the factorization of the bilateral series determines.

    loops, axis_walks and bridges are one-variable series (x-free,
    nonnegative x-exponents, nonpositive x-exponents respectively); walks
    is the full two-variable series.  min_abscissa is the smallest i >= 1
    with a slit walk ending at (i, 0), or None when no such endpoint shows
    up within the truncation order (truncation cannot prove nonexistence).
    """

    steps: StepSet
    order: int
    bilateral: TSeries
    factors: Factorization
    loops: TSeries
    axis_walks: TSeries
    walks: TSeries
    bridges: TSeries
    min_abscissa: int | None


def _min_axis_abscissa(axis_walks, steps):
    """Scan for the smallest positive axis abscissa reached by a slit walk."""
    top = axis_walks.order * steps.a
    for i in range(1, top + 1):
        if not axis_walks.extract_x(i).is_zero:
            return i
    return None


def solve(steps, order):
    """Solve the slit-plane model for a step set at a truncation order."""
    b = bilateral_series(steps, order)
    fact = canonical_factorize(b)
    loops = fact.f0
    axis_walks = fact.fplus
    tail = loops * fact.fminus
    walks = (kernel(steps, order) * tail.lift()).inverse()
    bridges = 1 - tail.inverse()
    return SlitSolution(
        steps=steps,
        order=order,
        bilateral=b,
        factors=fact,
        loops=loops,
        axis_walks=axis_walks,
        walks=walks,
        bridges=bridges,
        min_abscissa=_min_axis_abscissa(axis_walks, steps),
    )


def cycle_lemma_series(steps, order):
    """Series for slit walks ending at the nearest reachable axis point
    (p, 0): the x^p coefficient of log of the bilateral series.

    This is the conjugacy-class route; it must agree with the x^p
    extraction of axis_walks from solve()."""
    b = bilateral_series(steps, order)
    p = _min_axis_abscissa(canonical_factorize(b).fplus, steps)
    if p is None:
        raise ValueError(
            "minimal axis abscissa undetermined at this truncation order"
        )
    return b.log().extract_x(p)


def _compositions(total, parts):
    """Ordered tuples of positive integers with the given sum and length."""
    if parts == 1:
        yield (total,)
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        prev = 0
        comp = []
        for c in cuts:
            comp.append(c - prev)
            prev = c
        comp.append(total - prev)
        yield tuple(comp)


def axis_series_by_recursion(steps, i_max, order):
    """Series for slit walks ending at (i, 0), for i = 1 .. i_max, solved
    by induction on i from the alternating composition identity

        sum_k (-1)^(k-1)/k * sum_{i_1+..+i_k=i} S_{i_1} ... S_{i_k}
            = [x^i] log B(x; t).

    The k = 1 term isolates S_i; every other term only involves smaller
    indices."""
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    log_b = bilateral_series(steps, order).log()
    known = {}
    out = []
    for i in range(1, i_max + 1):
        s_i = log_b.extract_x(i)
        for k in range(2, i + 1):
            sign = Fraction((-1) ** (k - 1), k)
            for comp in _compositions(i, k):
                term = known[comp[0]]
                for part in comp[1:]:
                    term = term * known[part]
                s_i = s_i - term * sign
        known[i] = s_i
        out.append(s_i)
    return out


@dataclass
class SmallHeightData:
    """Ingredients of the square-root solution for step sets whose steps
    never change the ordinate by more than one.

    a_down / a_level / a_up collect x^di over the steps with dj = -1, 0,
    +1.  discriminant is (1 - t*a_level)^2 - 4 t^2 a_up a_down, a degree-2
    polynomial in t whose canonical factorization yields the whole model.
    up_ratio W and down_ratio V solve W = t(a_up + a_level W + a_down W^2)
    and V = t(a_down + a_level V + a_up V^2); they are the one-level
    ascent/descent series that power the fixed-ordinate extractions.
    """

    steps: StepSet
    a_down: LaurentPoly
    a_level: LaurentPoly
    a_up: LaurentPoly
    discriminant: TSeries
    discriminant_factors: Factorization
    up_ratio: TSeries
    down_ratio: TSeries


def small_height_data(steps, order):
    """Build the square-root ingredients for a small-height step set."""
    if not steps.is_small_height():
        raise ValueError("step set has a step with |dj| >= 2")
    a_down = vertical_projection(steps, -1)
    a_level = vertical_projection(steps, 0)
    a_up = vertical_projection(steps, 1)

    disc = TSeries(order, 1)
    disc.coeffs[0] = LaurentPoly.const(1, 1)
    if order >= 1:
        disc.coeffs[1] = a_level * (-2)
    if order >= 2:
        disc.coeffs[2] = a_level * a_level - 4 * (a_up * a_down)

    def ratio(first, mid, last):
        def step(w):
            return (TSeries.t_term(order, 1, 0, first) + w * mid + w * w * last).shift_up(1)

        return fixed_point(step, order, nvars=1)

    return SmallHeightData(
        steps=steps,
        a_down=a_down,
        a_level=a_level,
        a_up=a_up,
        discriminant=disc,
        discriminant_factors=canonical_factorize(disc),
        up_ratio=ratio(a_up, a_level, a_down),
        down_ratio=ratio(a_down, a_level, a_up),
    )


def solve_small_height(steps, order):
    """Solve a small-height model through the square-root formulas.

    The bilateral series is 1/sqrt(discriminant), and the canonical
    factors of the discriminant give loops = 1/sqrt(center part),
    axis_walks = 1/sqrt(plus part) and walks = sqrt(center * minus) / K.
    Must agree with solve() wherever both apply."""
    data = small_height_data(steps, order)
    fact = data.discriminant_factors
    loops = fact.f0.sqrt().inverse()
    axis_walks = fact.fplus.sqrt().inverse()
    tail_sqrt = (fact.f0 * fact.fminus).sqrt()
    walks = kernel(steps, order).inverse() * tail_sqrt.lift()
    bridges = 1 - tail_sqrt
    b = (fact.f0 * fact.fplus * fact.fminus).sqrt().inverse()
    solution = SlitSolution(
        steps=steps,
        order=order,
        bilateral=b,
        factors=Factorization(
            f0=loops, fplus=axis_walks, fminus=fact.fminus.sqrt().inverse()
        ),
        loops=loops,
        axis_walks=axis_walks,
        walks=walks,
        bridges=bridges,
        min_abscissa=_min_axis_abscissa(axis_walks, steps),
    )
    return data, solution


def row_series(data, j, solution=None):
    """Series for slit walks ending at ordinate j (small-height sets).

    For j >= 0 this is axis_walks * up_ratio^j, for j < 0 axis_walks *
    down_ratio^(-j).  When the needed descent (resp. ascent) polynomial is
    identically zero the ratio formula degenerates; the y-extraction of
    the full solution is used instead (and a solution must be supplied or
    it is recomputed)."""
    steps, order = data.steps, data.discriminant.order
    degenerate = (j > 0 and data.a_down.is_zero) or (j < 0 and data.a_up.is_zero)
    if degenerate:
        if solution is None:
            solution = solve(steps, order)
        return solution.walks.extract_y(j)
    axis_walks = data.discriminant_factors.fplus.sqrt().inverse()
    ratio = data.up_ratio if j >= 0 else data.down_ratio
    return axis_walks * ratio ** abs(j)


def check_splice_identities(steps, order, solution=None):
    """Verify the three identities obtained by splicing an arbitrary walk
    at the leftmost axis point it visits:

        reversed-axis-walks(1/x) * loops * axis-walks = bilateral,
        walks * K * bilateral = axis-walks,
        reversed-axis-walks(1/x) * loops * walks * K = 1.
    """
    sol = solution if solution is not None else solve(steps, order)
    rsol = solve(steps.reversed(), order)
    mirror = rsol.axis_walks.invert_x()
    k = kernel(steps, order)
    report = Report()
    report.add_series_equal(
        "splice-bilateral",
        mirror * sol.loops * sol.axis_walks,
        sol.bilateral,
    )
    report.add_series_equal(
        "splice-axis-walks",
        sol.walks * k * sol.bilateral.lift(),
        sol.axis_walks.lift(),
    )
    report.add_series_equal(
        "splice-all-walks",
        (mirror * sol.loops).lift() * sol.walks * k,
        TSeries.one(order, 2),
    )
    report.add_series_equal(
        "loop-reversal", rsol.loops, sol.loops,
        detail="loop series agree for reversed steps",
    )
    return report


def check_bridge_identities(steps, order, oracle_order=None, solution=None):
    """Verify the bridge functional identities and, up to oracle_order,
    the bridge series against the DP bridge counts:

        K * walks = 1 - bridges(1/x),    loops * (1 - bridges(0)) = 1.
    """
    if oracle_order is None:
        oracle_order = min(order, 10)
    sol = solution if solution is not None else solve(steps, order)
    k = kernel(steps, order)
    report = Report()
    report.add_series_equal(
        "bridge-kernel",
        k * sol.walks,
        (1 - sol.bridges).lift(),
    )
    report.add_series_equal(
        "bridge-loops",
        sol.loops * (1 - sol.bridges.extract_x(0)),
        TSeries.one(order, 1),
    )
    table = count_bridges(steps, oracle_order)
    bad = None
    for n in range(oracle_order + 1):
        expected = LaurentPoly(1, {i: c for (i, j), c in table.layer(n).items()})
        if sol.bridges.coeffs[n] != expected:
            bad = n
            break
    report.add("bridge-oracle", bad is None, bad,
               f"bridge counts match DP up to t^{oracle_order}")
    return report


def check_oracle_walks(steps, order, oracle_order=None, solution=None):
    """Compare the solved walk series coefficientwise with the brute-force
    DP count of slit-plane walks."""
    if oracle_order is None:
        oracle_order = min(order, 10)
    sol = solution if solution is not None else solve(steps, order)
    table = count_walks(steps, Domain.FULL_PLANE, Constraint.AVOID_SLIT, oracle_order)
    report = Report()
    bad = None
    for n in range(oracle_order + 1):
        expected = LaurentPoly(2, dict(table.layer(n)))
        if sol.walks.coeffs[n] != expected:
            bad = n
            break
    report.add("walks-oracle", bad is None, bad,
               f"slit-walk counts match DP up to t^{oracle_order}")
    loops = count_loops(steps, oracle_order)
    bad = None
    for n in range(oracle_order + 1):
        if sol.loops.coeffs[n] != LaurentPoly.const(1, loops[n]):
            bad = n
            break
    report.add("loops-oracle", bad is None, bad,
               f"loop counts match DP up to t^{oracle_order}")
    return report


@dataclass
class HalfPlaneSolution:
    """The square-lattice model confined to the upper half-plane with the
    slit still removed.  motzkin is the series of bicolored Motzkin walks
    (bilateral walks that never go below the axis); its canonical factors
    give the half-plane loops and axis walks, and walks follows from
    appending ascents."""

    order: int
    motzkin: TSeries
    loops: TSeries
    axis_walks: TSeries
    walks: TSeries


def motzkin_series(order):
    """Bicolored Motzkin walks on the square lattice: the unique solution
    of M = 1 + t(x + 1/x) M + t^2 M^2."""
    horizontal = LaurentPoly(1, {1: 1, -1: 1})

    def step(m):
        return 1 + (m * horizontal).shift_up(1) + (m * m).shift_up(2)

    return fixed_point(step, order, nvars=1)


def solve_half_plane(order):
    """Solve the square-lattice slit model restricted to the upper
    half-plane.  The Motzkin series plays the role the bilateral series
    plays in the full-plane model; its canonical factorization gives loops
    and axis walks, and walks = axis_walks / (1 - t y M)."""
    m = motzkin_series(order)
    fact = canonical_factorize(m)
    up = LaurentPoly(2, {(0, 1): 1})
    denom = TSeries.one(order, 2) - (m.lift() * up).shift_up(1)
    walks = fact.fplus.lift() * denom.inverse()
    return HalfPlaneSolution(
        order=order,
        motzkin=m,
        loops=fact.f0,
        axis_walks=fact.fplus,
        walks=walks,
    )


def check_half_plane(order, oracle_order=None):
    """Verify the half-plane solution: the Motzkin quadratic, the splice
    identity mirror * loops * axis_walks = motzkin, and the walk series
    against the DP count in the upper half-plane."""
    if oracle_order is None:
        oracle_order = min(order, 8)
    sol = solve_half_plane(order)
    square = StepSet.preset("square")
    report = Report()
    horizontal = LaurentPoly(1, {1: 1, -1: 1})
    report.add_series_equal(
        "motzkin-quadratic",
        sol.motzkin,
        1 + (sol.motzkin * horizontal).shift_up(1) + (sol.motzkin * sol.motzkin).shift_up(2),
    )
    report.add_series_equal(
        "half-plane-splice",
        sol.axis_walks.invert_x() * sol.loops * sol.axis_walks,
        sol.motzkin,
    )
    table = count_walks(
        square, Domain.UPPER_HALF_PLANE, Constraint.AVOID_SLIT, oracle_order
    )
    bad = None
    for n in range(oracle_order + 1):
        expected = LaurentPoly(2, dict(table.layer(n)))
        if sol.walks.coeffs[n] != expected:
            bad = n
            break
    report.add("half-plane-walks-oracle", bad is None, bad,
               f"upper half-plane slit-walk counts match DP up to t^{oracle_order}")
    loops = count_loops(square, oracle_order, domain=Domain.UPPER_HALF_PLANE)
    bad = None
    for n in range(oracle_order + 1):
        if sol.loops.coeffs[n] != LaurentPoly.const(1, loops[n]):
            bad = n
            break
    report.add("half-plane-loops-oracle", bad is None, bad,
               f"upper half-plane loop counts match DP up to t^{oracle_order}")
    return report
