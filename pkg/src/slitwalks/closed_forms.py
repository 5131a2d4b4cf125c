"""Catalog of explicit coefficient formulas used as ground truth.

Every generator here evaluates a closed form exactly (integer or Fraction
arithmetic, never floats) so the verification suite can confront solver
output with independently computed numbers: Catalan and Narayana values
for the square and diagonal lattices, the quartic fixed-point series of
the triangular lattice, the binomial-sum counts of the spider models, and
the central-binomial counts of the half-plane model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .series import LaurentPoly, TSeries, fixed_point


def catalan(n):
    """The Catalan number C_n = binom(2n, n) / (n + 1)  (OEIS A000108)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def catalan_series(order):
    """The Catalan generating series (1 - sqrt(1 - 4t)) / (2t), built from
    the series square root so it exercises the same machinery it checks."""
    one_minus = TSeries.from_scalars([1, -4], order + 1)
    num = 1 - one_minus.sqrt()
    return num.shift_down(1) * Fraction(1, 2)


def motzkin(n):
    """The Motzkin number M_n (OEIS A001006), by the standard recurrence."""
    vals = [1]
    for m in range(n):
        nxt = vals[m] + sum(vals[k] * vals[m - 1 - k] for k in range(m))
        vals.append(nxt)
    return vals[n]


def motzkin_pow2_series(order):
    """Generating series of M_n * 2^n, as the radical
    (1 - 2t - sqrt((1+2t)(1-6t))) / (8 t^2)."""
    inner = TSeries.from_scalars([1, -4, -12], order + 2)
    num = TSeries.from_scalars([1, -2], order + 2) - inner.sqrt()
    return num.shift_down(2) * Fraction(1, 8)


# -- ordinary square lattice ------------------------------------------------

def square_axis_point_count(n):
    """Slit walks of length 2n+1 ending at (1, 0): the Catalan number
    C_{2n+1}."""
    return catalan(2 * n + 1)


def square_point01_count(n):
    """Slit walks of length 2n+1 ending at (0, 1): 4^n * C_n."""
    return 4**n * catalan(n)


def square_refined_count(n, m):
    """Slit walks of length 2n+1 ending at (1, 0) with exactly 2m vertical
    steps: 4^m * binom(2n, 2m) * C_{n-m}."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    return 4**m * comb(2 * n, 2 * m) * catalan(n - m)


def square_loop_count(n):
    """Loops of length 2n on the square lattice: 2 * 4^n * C_n - C_{2n+1}."""
    return 2 * 4**n * catalan(n) - catalan(2 * n + 1)


def square_log_bilateral_coeff(i, n):
    """Coefficient of t^(2n+i) in the x^i part of the log of the square
    bilateral series: binom(4n+2i, 2n) / (2n+i)."""
    if i < 1 or n < 0:
        raise ValueError("need i >= 1 and n >= 0")
    return Fraction(comb(4 * n + 2 * i, 2 * n), 2 * n + i)


def square_bilateral_closed(order):
    """The square-lattice bilateral series in closed form:
    1 / sqrt((1 - t(x + 1/x + 2)) (1 - t(x + 1/x - 2)))."""
    plus = TSeries(order, 1)
    plus.coeffs[0] = LaurentPoly.const(1, 1)
    minus = TSeries(order, 1)
    minus.coeffs[0] = LaurentPoly.const(1, 1)
    if order >= 1:
        plus.coeffs[1] = LaurentPoly(1, {1: -1, -1: -1, 0: -2})
        minus.coeffs[1] = LaurentPoly(1, {1: -1, -1: -1, 0: 2})
    return (plus * minus).sqrt().inverse()


def square_motzkin_pair(order):
    """The pair (bicolored Motzkin series, bilateral series) for the square
    lattice, both built from the series square root.  M is recovered from
    the radical (1 - t(x + 1/x) - sqrt(same discriminant)) / (2 t^2)."""
    work = order + 2
    plus = TSeries(work, 1)
    plus.coeffs[0] = LaurentPoly.const(1, 1)
    plus.coeffs[1] = LaurentPoly(1, {1: -1, -1: -1, 0: -2})
    minus = TSeries(work, 1)
    minus.coeffs[0] = LaurentPoly.const(1, 1)
    minus.coeffs[1] = LaurentPoly(1, {1: -1, -1: -1, 0: 2})
    root = (plus * minus).sqrt()
    level = TSeries.t_term(work, 1, 1, LaurentPoly(1, {1: 1, -1: 1}))
    motzkin_part = ((1 - level - root).shift_down(2)) * Fraction(1, 2)
    return motzkin_part, square_bilateral_closed(order)


# -- diagonal square lattice --------------------------------------------------

def diagonal_axis_point_count(n):
    """Diagonal-step slit walks of length 2n ending at (2, 0):
    (1/2) * 4^n * C_n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (4**n * catalan(n)) // 2


def diagonal_loop_count(n):
    """Loops of length 2n on the diagonal lattice: 4^n * C_n."""
    return 4**n * catalan(n)


def narayana(n, m):
    """Diagonal-step slit walks of length 2n ending at (2, 0) with exactly
    2m-1 up-right/down-left steps: (1/2) (4^n / n) binom(n, m)
    binom(n, m-1) -- the Narayana distribution scaled by (1/2) 4^n."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    value = Fraction(4**n, 2 * n) * comb(n, m) * comb(n, m - 1)
    if value.denominator != 1:
        raise ArithmeticError("refined diagonal count did not come out integral")
    return value.numerator


# -- triangular lattice -------------------------------------------------------

def triangular_loop_series(order):
    """Loop series of the triangular lattice.  It equals g/t where g is
    the unique series with zero constant term satisfying

        g = t (1 - 2g + 6g^2 - 2g^3 + g^4) / (1 - g)^2.
    """

    def step(g):
        num = 1 - 2 * g + 6 * g**2 - 2 * g**3 + g**4
        return (num * ((1 - g) ** 2).inverse()).shift_up(1)

    return fixed_point(step, order + 1).shift_down(1)


# -- spider models ------------------------------------------------------------

def spider_min_abscissa(k):
    """Smallest positive axis abscissa reachable by a slit walk with steps
    (+-1, k), (+-1, -1): 1 when k is even, 2 when k is odd."""
    if k < 1:
        raise ValueError("need k >= 1")
    return 1 if k % 2 == 0 else 2


def spider_endpoint_count(k, n):
    """Spider slit walks of length n ending at the minimal axis point
    (p, 0), for steps (+-1, k), (+-1, -1) with k >= 2:

        ((k+1)/m) binom(n, (n+p)/2) sum_{i<m} binom(n-1, i) k^(m-1-i),

    where n = m(k+1).  For even k the count is only nonzero for odd n, and
    even n is rejected."""
    if k < 2:
        raise ValueError("need k >= 2")
    if n < 1 or n % (k + 1):
        raise ValueError("length must be a positive multiple of k+1")
    if k % 2 == 0 and n % 2 == 0:
        raise ValueError("even k requires odd length")
    m = n // (k + 1)
    p = spider_min_abscissa(k)
    total = sum(comb(n - 1, i) * k ** (m - 1 - i) for i in range(m))
    value = Fraction((k + 1) * comb(n, (n + p) // 2) * total, m)
    if value.denominator != 1:
        raise ArithmeticError("spider count did not come out integral")
    return value.numerator


def spider_vertical_series(k, order):
    """The unique series u with u = t (1 + u)^(k+1); it drives the purely
    vertical walk counts of the spider models."""
    if k < 1:
        raise ValueError("need k >= 1")

    def step(u):
        return ((1 + u) ** (k + 1)).shift_up(1)

    return fixed_point(step, order)


def spider_bilateral_1d(k, order):
    """Bilateral walks with the one-dimensional steps {-1, +k}:
    (1 + u(t^(k+1))) / (1 - k u(t^(k+1))) with u from
    spider_vertical_series.  The spider bilateral series is this with
    t replaced by (x + 1/x) t."""
    u = spider_vertical_series(k, order).subst_t_power(k + 1)
    return (1 + u) * (1 - k * u).inverse()


# -- half-plane model ---------------------------------------------------------

def halfplane_axis_count(n):
    """Upper-half-plane slit walks of length 2n+1 from the origin to
    (1, 0): binom(2n+1, n)^2 / (2n+1) = C_n * binom(2n+1, n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return catalan(n) * comb(2 * n + 1, n)


@dataclass(frozen=True)
class FormulaRef:
    """A named exact generator with a human-readable description."""

    name: str
    generator: object
    note: str = ""


CATALOG = {
    ref.name: ref
    for ref in (
        FormulaRef("catalan", catalan, "C_n = binom(2n,n)/(n+1), OEIS A000108"),
        FormulaRef("motzkin", motzkin, "Motzkin numbers, OEIS A001006"),
        FormulaRef("square_axis_point", square_axis_point_count,
                   "square slit walks to (1,0), length 2n+1: C_{2n+1}"),
        FormulaRef("square_point01", square_point01_count,
                   "square slit walks to (0,1), length 2n+1: 4^n C_n"),
        FormulaRef("square_refined", square_refined_count,
                   "square slit walks to (1,0) with 2m vertical steps"),
        FormulaRef("square_loops", square_loop_count,
                   "square loops of length 2n: 2*4^n C_n - C_{2n+1}"),
        FormulaRef("square_log_bilateral", square_log_bilateral_coeff,
                   "x^i log-bilateral coefficient binom(4n+2i,2n)/(2n+i)"),
        FormulaRef("diagonal_axis_point", diagonal_axis_point_count,
                   "diagonal slit walks to (2,0), length 2n: 4^n C_n / 2"),
        FormulaRef("diagonal_loops", diagonal_loop_count,
                   "diagonal loops of length 2n: 4^n C_n"),
        FormulaRef("narayana", narayana,
                   "diagonal refined counts: Narayana distribution"),
        FormulaRef("triangular_loops", triangular_loop_series,
                   "loop series from the quartic fixed-point equation"),
        FormulaRef("spider_endpoint", spider_endpoint_count,
                   "spider walks to the minimal axis point: binomial sum"),
        FormulaRef("halfplane_axis_point", halfplane_axis_count,
                   "half-plane slit walks to (1,0): binom(2n+1,n)^2/(2n+1)"),
    )
}
