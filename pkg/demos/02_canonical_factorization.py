"""The canonical factorization at work.

A series B(x; t) with B(x; 0) = 1 splits uniquely into an x-free factor,
a factor with positive x-exponents and a factor with negative ones.  For
the bilateral-walk series of any step set the three factors are the loop
series, the axis slit-walk series, and the mirror of the latter for the
reversed steps.  The split itself is three lines: log, sort exponents,
exp.
"""

from slitwalks import (
    LaurentPoly,
    StepSet,
    TSeries,
    bilateral_series,
    canonical_factorize,
    verify_factorization,
)

ORDER = 8

# a hand-made product: the factorization must recover the three factors
x = LaurentPoly(1, {1: 1})
xbar = LaurentPoly(1, {-1: 1})
f0 = TSeries.one(ORDER, 1) + TSeries.t_term(ORDER, 1, 1, 2)
fp = TSeries.one(ORDER, 1) + TSeries.t_term(ORDER, 1, 1, x)
fm = TSeries.one(ORDER, 1) + TSeries.t_term(ORDER, 1, 1, xbar)
fact = canonical_factorize(f0 * fp * fm)
print("recovered center :", fact.f0.scalars())
print("recovered plus   :", fact.fplus.coeff(1), "* t + ...")
print("recovered minus  :", fact.fminus.coeff(1), "* t + ...")
assert (fact.f0, fact.fplus, fact.fminus) == (f0, fp, fm)

# the same machine applied to a genuine walk model
asym = StepSet.parse("1,1;-1,1;0,-1")
b = bilateral_series(asym, ORDER)
fact = canonical_factorize(b)
print("\nasymmetric step set", asym.steps)
print("bilateral t^2 :", b.coeff(2))
print("loop factor   :", fact.f0.scalars())
print("plus factor t^2 :", fact.fplus.coeff(2))
print("minus factor t^2:", fact.fminus.coeff(2))

report = verify_factorization(b, fact)
print("\nverifier says:")
print(report)
assert report.ok
