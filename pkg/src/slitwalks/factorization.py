"""Canonical factorization of a series with unit constant term.

Any one-variable series B(x; t) with B(x; 0) = 1 splits uniquely as

    B = f0 * fplus * fminus

where f0 is free of x, fplus involves only positive x-exponents beyond its
leading 1, fminus only negative ones, and all three have constant term 1
with fplus, fminus additionally normalised so that their value at x = 0
(resp. 1/x = 0) is identically 1.  Existence and uniqueness come from
taking logarithms: log B decomposes unambiguously into its x-negative,
x-free and x-positive parts, and exponentiating each part back produces
the three factors.

This factorization is the engine of the slit-plane solver: the three
factors of the bilateral-walk series are exactly the loop series, the
series for slit walks ending on the axis, and its mirror for the reversed
step set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checks import Report
from .series import TSeries


@dataclass
class Factorization:
    """The canonical triple.  f0 is x-free, fplus has only nonnegative
    x-exponents, fminus only nonpositive ones; for n >= 1 the x^0 term of
    the t^n coefficient of fplus and fminus vanishes."""

    f0: TSeries
    fplus: TSeries
    fminus: TSeries

    def product(self):
        return self.f0 * self.fplus * self.fminus


def canonical_factorize(b):
    """Split a unit-constant-term series into its canonical triple.

    Route: take log, split every t-coefficient by the sign of the
    x-exponent (exponent 0 goes to the x-free part), exponentiate the
    three pieces."""
    if b.nvars != 1:
        raise ValueError("canonical factorization expects a one-variable series")
    ell = b.log()
    parts = {s: TSeries(b.order, 1) for s in (-1, 0, 1)}
    for n, p in enumerate(ell.coeffs):
        for s in (-1, 0, 1):
            parts[s].coeffs[n] = p.sign_part(s)
    return Factorization(
        f0=parts[0].exp(), fplus=parts[1].exp(), fminus=parts[-1].exp()
    )


def verify_factorization(b, fact):
    """Check every invariant of a canonical triple against the series it
    claims to factor; series mismatches report the first failing t-power."""
    report = Report()
    f0, fp, fm = fact.f0, fact.fplus, fact.fminus

    report.add("center-x-free", f0.is_x_free)
    report.add("center-unit-term", f0.coeffs[0].is_one)
    report.add("plus-unit-term", fp.coeffs[0].is_one)
    report.add("minus-unit-term", fm.coeffs[0].is_one)

    def side_ok(f, positive):
        for n in range(1, f.order + 1):
            exps = f.coeffs[n].coeffs
            if positive:
                if any(e < 1 for e in exps):
                    return n
            elif any(e > -1 for e in exps):
                return n
        return None

    bad = side_ok(fp, True)
    report.add("plus-support", bad is None, bad,
               "positive x-exponents only (x^0 term vanishes for n >= 1)")
    bad = side_ok(fm, False)
    report.add("minus-support", bad is None, bad,
               "negative x-exponents only (x^0 term vanishes for n >= 1)")

    report.add_series_equal("reconstruction", fact.product(), b)
    return report
