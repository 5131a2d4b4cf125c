"""Canonical factorization: worked triples, uniqueness, and the verifier."""

import random

import pytest

from slitwalks import (
    LaurentPoly,
    StepSet,
    TSeries,
    bilateral_series,
    canonical_factorize,
    solve,
    verify_factorization,
)
from slitwalks.closed_forms import square_loop_count

X = LaurentPoly(1, {1: 1})
XBAR = LaurentPoly(1, {-1: 1})


def random_triple(rng, order, max_exp=2, span=3):
    """A random admissible triple: the center is x-free, the sides carry
    strictly positive / strictly negative exponents beyond their unit
    constant terms."""
    f0 = TSeries.one(order, 1)
    fp = TSeries.one(order, 1)
    fm = TSeries.one(order, 1)
    for n in range(1, order + 1):
        f0.coeffs[n] = LaurentPoly.const(1, rng.randint(-span, span))
        fp.coeffs[n] = LaurentPoly(
            1, {e: rng.randint(-span, span) for e in range(1, rng.randint(1, max_exp) + 1)}
        )
        fm.coeffs[n] = LaurentPoly(
            1, {-e: rng.randint(-span, span) for e in range(1, rng.randint(1, max_exp) + 1)}
        )
    return f0, fp, fm


class TestWorkedExamples:
    def test_x_free_input(self):
        b = TSeries.from_scalars([1, 2, -5, 7], 3)
        fact = canonical_factorize(b)
        assert fact.f0 == b
        assert fact.fplus == TSeries.one(3, 1)
        assert fact.fminus == TSeries.one(3, 1)

    def test_three_linear_factors(self):
        order = 6
        f0 = TSeries.one(order, 1) + TSeries.t_term(order, 1, 1, 2)
        fp = TSeries.one(order, 1) + TSeries.t_term(order, 1, 1, X)
        fm = TSeries.one(order, 1) + TSeries.t_term(order, 1, 1, XBAR)
        fact = canonical_factorize(f0 * fp * fm)
        assert fact.f0 == f0
        assert fact.fplus == fp
        assert fact.fminus == fm

    def test_square_center_is_loop_series(self):
        b = bilateral_series(StepSet.preset("square"), 10)
        fact = canonical_factorize(b)
        got = fact.f0.scalars()
        for n in range(5):
            assert got[2 * n] == square_loop_count(n)
            if 2 * n + 1 <= 10:
                assert got[2 * n + 1] == 0

    def test_rejects_two_variable_series(self):
        with pytest.raises(ValueError):
            canonical_factorize(TSeries.one(3, 2))

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            canonical_factorize(TSeries.from_scalars([0, 1], 3))


class TestUniqueness:
    def test_roundtrip_random_triples(self):
        rng = random.Random(424242)
        for _ in range(10):
            f0, fp, fm = random_triple(rng, 16)
            fact = canonical_factorize(f0 * fp * fm)
            assert fact.f0 == f0
            assert fact.fplus == fp
            assert fact.fminus == fm

    def test_separable_product(self):
        rng = random.Random(11)
        _, g, h = random_triple(rng, 12)
        fact = canonical_factorize(g * h)
        assert fact.f0 == TSeries.one(12, 1)
        assert fact.fplus == g
        assert fact.fminus == h

    @pytest.mark.parametrize("preset", ["square", "diagonal"])
    def test_symmetric_sets_mirror(self, preset):
        # x <-> 1/x symmetry forces the minus factor to mirror the plus one
        fact = canonical_factorize(bilateral_series(StepSet.preset(preset), 10))
        assert fact.fminus == fact.fplus.invert_x()


class TestVerifier:
    def test_valid_triple_passes(self):
        b = bilateral_series(StepSet.preset("diagonal"), 8)
        report = verify_factorization(b, canonical_factorize(b))
        assert report.ok

    def test_perturbed_center_fails_at_order(self):
        b = bilateral_series(StepSet.preset("square"), 8)
        fact = canonical_factorize(b)
        k = 3
        fact.f0 = fact.f0 + TSeries.t_term(8, 1, k, 1)
        report = verify_factorization(b, fact)
        assert not report.ok
        failing = {c.name: c for c in report.checks if not c.passed}
        assert failing["reconstruction"].first_failure_order == k

    def test_plus_with_constant_term_fails_support(self):
        b = bilateral_series(StepSet.preset("square"), 8)
        fact = canonical_factorize(b)
        fact.fplus = fact.fplus + TSeries.t_term(8, 1, 1, 1)
        report = verify_factorization(b, fact)
        failing = {c.name for c in report.checks if not c.passed}
        assert "plus-support" in failing

    def test_solution_factors_verify(self):
        sol = solve(StepSet.parse("1,1;-1,1;0,-1"), 10)
        assert verify_factorization(sol.bilateral, sol.factors).ok
