"""Two models beyond the comfortable cases.

The spider step sets (+-1, k), (+-1, -1) leave the small-height world as
soon as k >= 2; the generic factorization route still solves them, and
the walks to the nearest axis point obey an explicit binomial sum.  The
second model confines the square lattice to the upper half-plane, where
the bicolored Motzkin series takes over the role of the bilateral series.
"""

from slitwalks import (
    Constraint,
    Domain,
    StepSet,
    count_walks,
    cycle_lemma_series,
    solve,
    solve_half_plane,
)
from slitwalks.closed_forms import (
    halfplane_axis_count,
    spider_endpoint_count,
    spider_min_abscissa,
)

print("spider models: steps (1,k), (-1,k), (1,-1), (-1,-1)")
for k in (2, 3):
    steps = StepSet.preset(f"spider:{k}")
    p = spider_min_abscissa(k)
    sol = solve(steps, 12)
    assert sol.min_abscissa == p
    cycle = cycle_lemma_series(steps, 12).scalars()
    table = count_walks(steps, Domain.FULL_PLANE, Constraint.AVOID_SLIT, 12)
    print(f"\n  k={k}: nearest axis point ({p}, 0)")
    for n in range(1, 13):
        if n % (k + 1) or (k % 2 == 0 and n % 2 == 0):
            continue
        formula = spider_endpoint_count(k, n)
        assert cycle[n] == formula == table.count(n, p, 0)
        print(f"    length {n:>2}: {formula}  (cycle route = formula = DP)")

print("\nupper half-plane, square steps, slit still forbidden")
sol = solve_half_plane(17)
s10 = sol.axis_walks.extract_x(1).scalars()
print("  walks to (1,0):")
for n in range(9):
    assert s10[2 * n + 1] == halfplane_axis_count(n)
    print(f"    length {2 * n + 1:>2}: {s10[2 * n + 1]}"
          "  = binom(2n+1,n)^2/(2n+1)")
print("  Motzkin series opening:", sol.motzkin.coeff(2), "* t^2 + ...")
