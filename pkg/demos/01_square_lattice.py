"""A tour of the ordinary square lattice.

Walks start at the origin and may step north, south, east or west, but no
vertex after the first may land on the half-line of nonpositive abscissae.
The walks ending at (1, 0) after 2n+1 steps are counted by the Catalan
number C_{2n+1}, those ending at (0, 1) by 4^n C_n -- and the whole model
is solved by factoring the easy series of unconstrained axis-bound walks.
"""

from slitwalks import StepSet, solve
from slitwalks.closed_forms import (
    catalan,
    square_loop_count,
    square_point01_count,
)

ORDER = 15
square = StepSet.preset("square")
sol = solve(square, ORDER)

print("step set:", square)
print("smallest reachable axis point: (%d, 0)" % sol.min_abscissa)

print("\nwalks ending at (1,0)  --  odd Catalan numbers")
s10 = sol.axis_walks.extract_x(1).scalars()
print(f"{'length':>8} {'solver':>12} {'C_(2n+1)':>12}")
for n in range(8):
    print(f"{2 * n + 1:>8} {s10[2 * n + 1]:>12} {catalan(2 * n + 1):>12}")

print("\nwalks ending at (0,1)  --  4^n C_n")
a01 = sol.walks.extract_y(1).extract_x(0).scalars()
for n in range(8):
    assert a01[2 * n + 1] == square_point01_count(n)
    print(f"  length {2 * n + 1:>2}: {a01[2 * n + 1]}")

print("\nloops (returns to the origin avoiding the negative axis)")
loops = sol.loops.scalars()
for n in range(6):
    assert loops[2 * n] == square_loop_count(n)
    print(f"  length {2 * n:>2}: {loops[2 * n]}")

print("\nbridges end on the forbidden half-line; the first few layers:")
for n in range(1, 5):
    print(f"  t^{n}: {sol.bridges.coeff(n)!r}")
