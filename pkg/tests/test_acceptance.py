"""Acceptance suite: one test per criterion, one printed line per criterion.

Every comparison is exact (integers or rationals); the only tolerances in
this file are the two wall-clock budgets.  Run with `pytest -s` to see the
pass/fail lines.
"""

import random
import time

from slitwalks import (
    Constraint,
    Domain,
    LaurentPoly,
    StepSet,
    TSeries,
    canonical_factorize,
    check_bridge_identities,
    check_oracle_walks,
    check_splice_identities,
    count_refined,
    count_walks,
    cycle_lemma_series,
    solve,
    solve_half_plane,
)
from slitwalks.closed_forms import (
    catalan,
    halfplane_axis_count,
    narayana,
    spider_endpoint_count,
    spider_min_abscissa,
    square_refined_count,
    triangular_loop_series,
)
from slitwalks.verify import integral_nonnegative

SQUARE = StepSet.preset("square")
DIAGONAL = StepSet.preset("diagonal")
TRIANGULAR = StepSet.preset("triangular")
SPIDER2 = StepSet.preset("spider:2")
SPIDER3 = StepSet.preset("spider:3")
ASYMMETRIC = StepSet.parse("1,1;-1,1;0,-1")

PRESET_SETS = (SQUARE, DIAGONAL, TRIANGULAR, SPIDER2, SPIDER3)


def _criterion(num, description, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {description}")
    assert ok, f"criterion {num}: {description}"


def test_criterion_01_square_catalan_endpoints():
    start = time.monotonic()
    sol = solve(SQUARE, 15)
    s10 = sol.axis_walks.extract_x(1).scalars()
    ok = all(s10[2 * n + 1] == catalan(2 * n + 1) for n in range(8))
    a01 = sol.walks.extract_y(1).extract_x(0).scalars()
    ok &= all(a01[2 * n + 1] == 4**n * catalan(n) for n in range(8))
    elapsed = time.monotonic() - start
    ok &= elapsed < 10.0
    _criterion(1, "square endpoint counts C_{2n+1} and 4^n C_n for n <= 7 "
                  f"({elapsed:.2f}s < 10s)", ok)


def test_criterion_02_square_refined_counts():
    marked = ((0, 1), (0, -1))
    layers = count_refined(SQUARE, marked, Domain.FULL_PLANE,
                           Constraint.AVOID_SLIT, 13)
    ok = True
    for n in range(7):
        for m in range(n + 1):
            got = layers[2 * n + 1].get((1, 0, 2 * m), 0)
            ok &= got == square_refined_count(n, m)
    _criterion(2, "square refined counts 4^m binom(2n,2m) C_{n-m}, n <= 6", ok)


def test_criterion_03_diagonal_counts():
    table = count_walks(DIAGONAL, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 12)
    ok = all(
        table.count(2 * n, 2, 0) == (4**n * catalan(n)) // 2
        for n in range(1, 7)
    )
    marked = ((1, 1), (-1, -1))
    layers = count_refined(DIAGONAL, marked, Domain.FULL_PLANE,
                           Constraint.AVOID_SLIT, 10)
    for n in range(1, 6):
        for m in range(1, n + 1):
            got = layers[2 * n].get((2, 0, 2 * m - 1), 0)
            ok &= got == narayana(n, m)
    _criterion(3, "diagonal axis counts 4^n C_n / 2 (n <= 6) and Narayana "
                  "refinement (n <= 5)", ok)


def test_criterion_04_triangular_loops():
    sol = solve(TRIANGULAR, 20)
    closed = triangular_loop_series(20)
    vals = sol.loops.scalars()
    ok = sol.loops == closed and vals[2] == 5 and vals[3] == 8
    _criterion(4, "triangular loop series matches the quartic fixed point "
                  "to order 20", ok)


def test_criterion_05_spider_models():
    ok = True
    for k, steps in ((2, SPIDER2), (3, SPIDER3)):
        p = spider_min_abscissa(k)
        cycle = cycle_lemma_series(steps, 12).scalars()
        table = count_walks(steps, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 12)
        for n in range(1, 13):
            if n % (k + 1) or (k % 2 == 0 and n % 2 == 0):
                continue
            want = spider_endpoint_count(k, n)
            ok &= cycle[n] == want
            ok &= table.count(n, p, 0) == want
    _criterion(5, "spider k=2,3 cycle route equals binomial-sum formula and "
                  "DP oracle for valid n <= 12", ok)


def test_criterion_06_loop_walk_product_identity():
    order = 24
    sol = solve(SQUARE, order)
    walks_ones = sol.walks.eval_ones()
    lhs = sol.loops * walks_ones * walks_ones
    rhs = (TSeries.from_scalars([1, -4], order) ** 3).sqrt().inverse()
    _criterion(6, "square lattice: loops * walks(1,1)^2 = (1-4t)^(-3/2) "
                  "to order 24", lhs == rhs)


def test_criterion_07_splice_identities_and_oracle():
    start = time.monotonic()
    ok = True
    for steps in (SQUARE, DIAGONAL, TRIANGULAR, SPIDER2, ASYMMETRIC):
        sol = solve(steps, 16)
        ok &= check_splice_identities(steps, 16, solution=sol).ok
        ok &= check_oracle_walks(steps, 16, oracle_order=10, solution=sol).ok
    elapsed = time.monotonic() - start
    ok &= elapsed < 120.0
    _criterion(7, "splice identities to order 16 and walk oracle to order 10 "
                  f"on five step sets ({elapsed:.1f}s < 120s)", ok)


def test_criterion_08_factorization_roundtrip():
    rng = random.Random(0xC0FFEE)
    order = 32
    ok = True
    for _ in range(50):
        f0 = TSeries.one(order, 1)
        fp = TSeries.one(order, 1)
        fm = TSeries.one(order, 1)
        for n in range(1, order + 1):
            f0.coeffs[n] = LaurentPoly.const(1, rng.randint(-3, 3))
            fp.coeffs[n] = LaurentPoly(
                1, {e: rng.randint(-3, 3) for e in range(1, rng.randint(2, 3))}
            )
            fm.coeffs[n] = LaurentPoly(
                1, {-e: rng.randint(-3, 3) for e in range(1, rng.randint(2, 3))}
            )
        fact = canonical_factorize(f0 * fp * fm)
        ok &= fact.f0 == f0 and fact.fplus == fp and fact.fminus == fm
    _criterion(8, "canonical factorization recovers 50 random admissible "
                  "triples at order 32", ok)


def test_criterion_09_bridge_identities():
    ok = True
    for steps in PRESET_SETS:
        ok &= check_bridge_identities(steps, 12, oracle_order=10).ok
    _criterion(9, "bridge identities to order 12 and bridge oracle to "
                  "order 10 on all presets", ok)


def test_criterion_10_half_plane():
    sol = solve_half_plane(17)
    s10 = sol.axis_walks.extract_x(1).scalars()
    ok = all(s10[2 * n + 1] == halfplane_axis_count(n) for n in range(9))
    table = count_walks(SQUARE, Domain.UPPER_HALF_PLANE,
                        Constraint.AVOID_SLIT, 8)
    for n in range(9):
        ok &= sol.walks.coeff(n) == LaurentPoly(2, dict(table.layer(n)))
    _criterion(10, "half-plane axis counts binom(2n+1,n)^2/(2n+1) for n <= 8 "
                   "and walk oracle to order 8", ok)


def test_criterion_11_integrality():
    ok = True
    for steps in PRESET_SETS:
        sol = solve(steps, 20)
        for series in (sol.loops, sol.axis_walks, sol.walks, sol.bridges):
            ok &= integral_nonnegative(series)
    half = solve_half_plane(20)
    for series in (half.loops, half.axis_walks, half.walks):
        ok &= integral_nonnegative(series)
    _criterion(11, "all emitted coefficients at order 20 are nonnegative "
                   "integers on every preset", ok)
