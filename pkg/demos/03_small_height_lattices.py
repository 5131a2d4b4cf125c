"""Square-root solutions for steps of small height variation.

When no step changes the ordinate by more than one, everything collapses
to square roots of one quadratic discriminant: the bilateral series is
1/sqrt(disc), and the canonical factors of the discriminant solve the
slit model.  The diagonal and triangular lattices are worked here, with
the triangular loop series produced a second time from its quartic
fixed-point equation as a cross-check.
"""

from slitwalks import StepSet, row_series, solve, solve_small_height
from slitwalks.closed_forms import (
    diagonal_loop_count,
    narayana,
    triangular_loop_series,
)

ORDER = 14

print("diagonal lattice")
diagonal = StepSet.preset("diagonal")
data, sol = solve_small_height(diagonal, ORDER)
print("  discriminant:", data.discriminant.coeff(2), "* t^2 + ...")
loops = sol.loops.scalars()
for n in range(5):
    assert loops[2 * n] == diagonal_loop_count(n)
print("  loops:", [loops[2 * n] for n in range(6)], " (4^n C_n)")
print("  walks to (2,0):", sol.axis_walks.extract_x(2).scalars()[2::2])
print("  Narayana refinement, n=3:",
      [narayana(3, m) for m in (1, 2, 3)], "summing to",
      sum(narayana(3, m) for m in (1, 2, 3)))

print("\ntriangular lattice")
triangular = StepSet.preset("triangular")
data, sol = solve_small_height(triangular, ORDER)
fixed = triangular_loop_series(ORDER)
assert sol.loops == fixed == solve(triangular, ORDER).loops
print("  loop series (three independent routes agree):")
print("   ", sol.loops.scalars()[:9])

print("\n  walks ending at ordinate j, via one-level ascent/descent ratios")
for j in (-1, 0, 1, 2):
    series = row_series(data, j, solution=sol)
    assert series == sol.walks.extract_y(j)
    print(f"    j={j:>2}: t^3 coefficient {series.coeff(3)!r}")
