"""Step sets, kernel construction and the DP counting oracles.

The DP tables themselves are validated against exhaustive enumeration of
all step sequences for small lengths; everything faster in the package is
later judged against the DP tables.
"""

import pytest

from slitwalks import (
    Constraint,
    CrossCheckError,
    Domain,
    LaurentPoly,
    StepSet,
    TSeries,
    bilateral_series,
    count_bridges,
    count_loops,
    count_refined,
    count_walks,
    kernel,
)

from bruteforce import bridge_counts, loop_count, refined_counts, walk_counts

SQUARE = StepSet.preset("square")
DIAGONAL = StepSet.preset("diagonal")
TRIANGULAR = StepSet.preset("triangular")
SPIDER2 = StepSet.preset("spider:2")


class TestStepSet:
    def test_parse_and_presets(self):
        parsed = StepSet.parse("1,0;-1,0;0,1;0,-1")
        assert set(parsed.steps) == set(SQUARE.steps)
        assert SQUARE.a == 1 and SQUARE.b == 1
        assert SPIDER2.steps == ((1, 2), (-1, 2), (1, -1), (-1, -1))
        assert StepSet.preset("spider:1").steps == DIAGONAL.steps or \
            set(StepSet.preset("spider:1").steps) == set(DIAGONAL.steps)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            StepSet.parse("1,0;2")
        with pytest.raises(ValueError):
            StepSet.parse("a,b")
        with pytest.raises(ValueError):
            StepSet.preset("hexagonal")
        with pytest.raises(ValueError):
            StepSet.preset("spider:0")

    def test_no_duplicates_nonempty(self):
        with pytest.raises(ValueError):
            StepSet(((1, 0), (1, 0)))
        with pytest.raises(ValueError):
            StepSet(())

    def test_zero_step_warns(self):
        with pytest.warns(UserWarning):
            StepSet(((0, 0), (1, 0)))

    def test_reverse(self):
        assert set(SQUARE.reversed().steps) == set(SQUARE.steps)
        assert StepSet(((1, 2),)).reversed().steps == ((-1, -2),)
        asym = StepSet(((1, 1), (-1, 1), (0, -1)))
        assert asym.reversed().reversed().steps == asym.steps


class TestKernel:
    def test_square(self):
        k = kernel(SQUARE, 3)
        assert k.coeff(0) == LaurentPoly.const(2, 1)
        assert k.coeff(1) == LaurentPoly(
            2, {(1, 0): -1, (-1, 0): -1, (0, 1): -1, (0, -1): -1}
        )
        assert k.coeff(2).is_zero and k.coeff(3).is_zero

    def test_diagonal_factors(self):
        # 1 - t(x + 1/x)(y + 1/y)
        k = kernel(DIAGONAL, 2)
        horiz = LaurentPoly(2, {(1, 0): 1, (-1, 0): 1})
        vert = LaurentPoly(2, {(0, 1): 1, (0, -1): 1})
        assert k.coeff(1) == horiz * vert * -1

    def test_singleton(self):
        k = kernel(StepSet(((1, 0),)), 2)
        assert k.coeff(1) == LaurentPoly(2, {(1, 0): -1})


class TestCountWalks:
    def test_square_slit_axis_point(self):
        table = count_walks(SQUARE, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 3)
        assert table.count(3, 1, 0) == 5

    def test_slit_endpoint_never_on_slit(self):
        table = count_walks(SQUARE, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 6)
        for n in range(1, 7):
            assert table.count(n, -1, 0) == 0
            assert table.count(n, 0, 0) == 0

    def test_spider_axis_point(self):
        table = count_walks(SPIDER2, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 3)
        oracle = walk_counts(SPIDER2, 3, avoid_slit=True)
        assert table.count(3, 1, 0) == oracle[(1, 0)] == 9

    @pytest.mark.parametrize("steps", [SQUARE, DIAGONAL, TRIANGULAR, SPIDER2])
    @pytest.mark.parametrize("avoid_slit", [False, True])
    @pytest.mark.parametrize("upper", [False, True])
    def test_against_bruteforce(self, steps, avoid_slit, upper):
        domain = Domain.UPPER_HALF_PLANE if upper else Domain.FULL_PLANE
        constraint = Constraint.AVOID_SLIT if avoid_slit else Constraint.NONE
        n_max = 4 if len(steps.steps) > 4 else 5
        table = count_walks(steps, domain, constraint, n_max)
        for n in range(n_max + 1):
            oracle = walk_counts(steps, n, avoid_slit=avoid_slit, upper_half=upper)
            assert table.layer(n) == oracle

    def test_slit_dominated_by_free(self):
        free = count_walks(SQUARE, Domain.FULL_PLANE, Constraint.NONE, 6)
        slit = count_walks(SQUARE, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 6)
        for n in range(7):
            for key, c in slit.layer(n).items():
                assert c <= free.layer(n)[key]

    def test_total_bounded_by_power(self):
        slit = count_walks(SQUARE, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 5)
        for n in range(1, 6):
            assert slit.total(n) < 4**n
        # a set that can never touch the slit achieves the bound
        lifted = StepSet(((0, 1), (1, 1)))
        table = count_walks(lifted, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 5)
        for n in range(6):
            assert table.total(n) == 2**n


class TestCountLoops:
    def test_length_two(self):
        assert count_loops(SQUARE, 2)[2] == 3
        assert count_loops(DIAGONAL, 2)[2] == 4
        assert count_loops(TRIANGULAR, 2)[2] == 5

    @pytest.mark.parametrize("steps", [SQUARE, DIAGONAL, TRIANGULAR])
    def test_against_bruteforce(self, steps):
        n_max = 4 if len(steps.steps) > 4 else 6
        got = count_loops(steps, n_max)
        for n in range(n_max + 1):
            assert got[n] == loop_count(steps, n)

    def test_upper_domain(self):
        got = count_loops(SQUARE, 6, domain=Domain.UPPER_HALF_PLANE)
        for n in range(7):
            assert got[n] == loop_count(SQUARE, n, upper_half=True)


class TestCountBridges:
    def test_square_length_one(self):
        table = count_bridges(SQUARE, 1)
        assert table.layer(1) == {(-1, 0): 1}

    def test_square_length_two_origin(self):
        # e then w, n then s, s then n; the w-first path is already a
        # bridge at length 1 and contributes nothing here
        table = count_bridges(SQUARE, 2)
        assert table.count(2, 0, 0) == 3

    def test_diagonal_length_one(self):
        assert count_bridges(DIAGONAL, 1).layer(1) == {}

    @pytest.mark.parametrize("steps", [SQUARE, DIAGONAL, TRIANGULAR, SPIDER2])
    def test_against_bruteforce(self, steps):
        n_max = 4 if len(steps.steps) > 4 else 5
        table = count_bridges(steps, n_max)
        for n in range(1, n_max + 1):
            assert table.layer(n) == bridge_counts(steps, n)


class TestBilateralSeries:
    def test_square_second_order(self):
        b = bilateral_series(SQUARE, 4)
        oracle = walk_counts(SQUARE, 2)
        axis = {i: c for (i, j), c in oracle.items() if j == 0}
        assert b.coeff(2) == LaurentPoly(1, axis)
        assert b.coeff(2) == LaurentPoly(1, {2: 1, -2: 1, 0: 4})

    def test_matches_free_walk_counts(self):
        # coefficient of t^n x^i y^j in 1/K equals the free DP count
        for steps in (SQUARE, SPIDER2):
            inv = kernel(steps, 5).inverse()
            table = count_walks(steps, Domain.FULL_PLANE, Constraint.NONE, 5)
            for n in range(6):
                assert inv.coeff(n) == LaurentPoly(2, dict(table.layer(n)))

    def test_no_level_steps(self):
        b = bilateral_series(SPIDER2, 3)
        assert b.coeff(1).is_zero

    def test_degenerate_set(self):
        # no bilateral walk beyond the empty one
        b = bilateral_series(StepSet(((1, 2),)), 5)
        assert b == TSeries.one(5, 1)


class TestCountRefined:
    def test_square_vertical_marks(self):
        marked = ((0, 1), (0, -1))
        layers = count_refined(SQUARE, marked, Domain.FULL_PLANE,
                               Constraint.AVOID_SLIT, 3)
        assert layers[3][(1, 0, 2)] == 4

    def test_diagonal_up_right_marks(self):
        marked = ((1, 1), (-1, -1))
        layers = count_refined(DIAGONAL, marked, Domain.FULL_PLANE,
                               Constraint.AVOID_SLIT, 4)
        assert layers[4][(2, 0, 1)] == 8

    def test_empty_marks_reduce_to_plain_counts(self):
        layers = count_refined(SQUARE, (), Domain.FULL_PLANE,
                               Constraint.AVOID_SLIT, 4)
        table = count_walks(SQUARE, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 4)
        for n in range(5):
            flat = {(i, j): c for (i, j, m), c in layers[n].items()}
            assert flat == table.layer(n)

    def test_marked_must_be_subset(self):
        with pytest.raises(ValueError):
            count_refined(SQUARE, ((2, 2),), Domain.FULL_PLANE,
                          Constraint.NONE, 2)

    @pytest.mark.parametrize("steps,marked", [
        (SQUARE, ((0, 1), (0, -1))),
        (DIAGONAL, ((1, 1), (-1, -1))),
    ])
    def test_against_bruteforce(self, steps, marked):
        layers = count_refined(steps, marked, Domain.FULL_PLANE,
                               Constraint.AVOID_SLIT, 5)
        for n in range(6):
            assert layers[n] == refined_counts(steps, marked, n, avoid_slit=True)


class TestCrossRouteGuard:
    def test_disagreement_is_fatal(self):
        # sanity: the guard exists and the type is importable; a real
        # disagreement would be an internal bug, so simulate one
        with pytest.raises(CrossCheckError):
            raise CrossCheckError("simulated")
