"""Exact truncated-series algebra over sparse Laurent-polynomial coefficients.

Every solver computation in this package reduces to the ring operations
defined here.  A LaurentPoly is a sparse polynomial in one variable x (or
two variables x, y) together with their reciprocals; a TSeries is a power
series in t truncated at a fixed order N whose t-coefficients are
LaurentPoly values.

Arithmetic is exact throughout.  Coefficients are plain Python integers
wherever possible and fractions.Fraction as soon as a division leaves the
integers; a Fraction that becomes integral is normalised back to int.
Zero coefficients are never stored.

Series of different truncation orders (or different variable arity) never
mix: combining them raises ValueError rather than silently re-truncating.
"""

from __future__ import annotations

from fractions import Fraction

Coef = int | Fraction


def _norm(c):
    """Collapse integral Fractions to int; leave everything else alone."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _clean(coeffs):
    """Drop zeros and normalise coefficient types in a raw exponent map."""
    return {e: _norm(c) for e, c in coeffs.items() if c}


def _div_exact(c, n):
    """Divide a coefficient by a positive integer, exactly."""
    if type(c) is int:
        q, r = divmod(c, n)
        return q if r == 0 else Fraction(c, n)
    return _norm(c / n)


def _pmul(a, b, nvars):
    """Raw product of two exponent maps."""
    if not a or not b:
        return {}
    out = {}
    if nvars == 1:
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    else:
        for e1, c1 in a.items():
            x1, y1 = e1
            for e2, c2 in b.items():
                k = (x1 + e2[0], y1 + e2[1])
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


def _padd_into(acc, p, scale=1):
    """Accumulate scale*p into the raw exponent map acc, in place."""
    if scale == 1:
        for e, c in p.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
    elif scale:
        for e, c in p.items():
            v = acc.get(e, 0) + scale * c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)


class LaurentPoly:
    """Sparse Laurent polynomial with exact rational coefficients.

    The exponent map uses int keys for one variable and (i, j) tuples for
    two.  Invariants: no stored zero coefficients, ints preferred over
    integral Fractions.
    """

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars, coeffs=None):
        if nvars not in (1, 2):
            raise ValueError("nvars must be 1 or 2")
        self.nvars = nvars
        self.coeffs = _clean(coeffs) if coeffs else {}

    @classmethod
    def _raw(cls, nvars, coeffs):
        """Wrap an already-clean exponent map without copying."""
        p = object.__new__(cls)
        p.nvars = nvars
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = _norm(c)
        if not c:
            return cls.zero(nvars)
        return cls._raw(nvars, {cls._zero_key(nvars): c})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        if nvars == 1 and not isinstance(exps, int):
            (exps,) = exps
        c = _norm(c)
        return cls._raw(nvars, {exps: c} if c else {})

    @staticmethod
    def _zero_key(nvars):
        return 0 if nvars == 1 else (0, 0)

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_one(self):
        return self.coeffs == {self._zero_key(self.nvars): 1}

    @property
    def is_constant(self):
        return not self.coeffs or (
            len(self.coeffs) == 1 and self._zero_key(self.nvars) in self.coeffs
        )

    def coeff(self, exps):
        if self.nvars == 1 and not isinstance(exps, int):
            (exps,) = exps
        return self.coeffs.get(exps, 0)

    def constant_term(self):
        return self.coeffs.get(self._zero_key(self.nvars), 0)

    def bounds(self):
        """(min, max) exponent per variable; None for the zero polynomial."""
        if not self.coeffs:
            return None
        if self.nvars == 1:
            return (min(self.coeffs), max(self.coeffs))
        xs = [e[0] for e in self.coeffs]
        ys = [e[1] for e in self.coeffs]
        return ((min(xs), max(xs)), (min(ys), max(ys)))

    def exponents_in(self, lo, hi, var=0):
        """True if every exponent of the given variable lies in [lo, hi]."""
        if self.nvars == 1:
            return all(lo <= e <= hi for e in self.coeffs)
        return all(lo <= e[var] <= hi for e in self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable arity mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        _padd_into(out, other.coeffs)
        return LaurentPoly._raw(self.nvars, _clean(out))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        _padd_into(out, other.coeffs, -1)
        return LaurentPoly._raw(self.nvars, _clean(out))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(
                self.nvars, {e: _norm(c * other) for e, c in self.coeffs.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        return LaurentPoly._raw(
            self.nvars, _clean(_pmul(self.coeffs, other.coeffs, self.nvars))
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = LaurentPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def div_int(self, n):
        """Exact division of every coefficient by a positive integer."""
        return LaurentPoly._raw(
            self.nvars, {e: _div_exact(c, n) for e, c in self.coeffs.items()}
        )

    # -- transformations --------------------------------------------------

    def invert_var(self, var=0):
        """Substitute x -> 1/x (or y -> 1/y for var=1)."""
        if self.nvars == 1:
            return LaurentPoly._raw(1, {-e: c for e, c in self.coeffs.items()})
        if var == 0:
            return LaurentPoly._raw(2, {(-i, j): c for (i, j), c in self.coeffs.items()})
        return LaurentPoly._raw(2, {(i, -j): c for (i, j), c in self.coeffs.items()})

    def lift(self):
        """Embed a one-variable polynomial as a y-free two-variable one."""
        if self.nvars != 1:
            raise ValueError("lift expects a one-variable polynomial")
        return LaurentPoly._raw(2, {(e, 0): c for e, c in self.coeffs.items()})

    def extract_second(self, j):
        """Coefficient of y^j, as a polynomial in x alone."""
        if self.nvars != 2:
            raise ValueError("extract_second expects a two-variable polynomial")
        return LaurentPoly._raw(
            1, {i: c for (i, jj), c in self.coeffs.items() if jj == j}
        )

    def sign_part(self, sign):
        """Terms whose x-exponent is negative (-1), zero (0) or positive (+1)."""
        if self.nvars != 1:
            raise ValueError("sign_part expects a one-variable polynomial")
        if sign == 0:
            c = self.coeffs.get(0, 0)
            return LaurentPoly._raw(1, {0: c} if c else {})
        if sign > 0:
            return LaurentPoly._raw(1, {e: c for e, c in self.coeffs.items() if e > 0})
        return LaurentPoly._raw(1, {e: c for e, c in self.coeffs.items() if e < 0})

    def subs_ones(self):
        """Value at x = 1 (and y = 1): the sum of all coefficients."""
        return _norm(sum(self.coeffs.values(), 0))

    # -- misc -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = ("x",) if self.nvars == 1 else ("x", "y")
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            exps = (e,) if self.nvars == 1 else e
            mono = "*".join(
                f"{v}^{k}" if k != 1 else v for v, k in zip(names, exps) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class TSeries:
    """Power series in t, truncated at a fixed order, with LaurentPoly
    coefficients.

    All operations are exact modulo t^(order+1).  Binary operations demand
    equal orders and equal variable arity.
    """

    __slots__ = ("order", "nvars", "coeffs")

    def __init__(self, order, nvars, coeffs=None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.nvars = nvars
        if coeffs is None:
            self.coeffs = [LaurentPoly.zero(nvars) for _ in range(order + 1)]
        else:
            coeffs = list(coeffs)
            if len(coeffs) != order + 1:
                raise ValueError("need exactly order+1 coefficients")
            for p in coeffs:
                if p.nvars != nvars:
                    raise ValueError("coefficient arity mismatch")
            self.coeffs = coeffs

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order, nvars=1):
        return cls(order, nvars)

    @classmethod
    def one(cls, order, nvars=1):
        s = cls(order, nvars)
        s.coeffs[0] = LaurentPoly.const(nvars, 1)
        return s

    @classmethod
    def from_scalars(cls, values, order, nvars=1):
        """Series with x-free coefficients taken from an iterable of scalars."""
        values = list(values)
        s = cls(order, nvars)
        for n, v in enumerate(values[: order + 1]):
            s.coeffs[n] = LaurentPoly.const(nvars, v)
        return s

    @classmethod
    def t_term(cls, order, nvars, n, poly):
        """The series poly * t^n (zero if n exceeds the order)."""
        s = cls(order, nvars)
        if n <= order:
            if isinstance(poly, (int, Fraction)):
                poly = LaurentPoly.const(nvars, poly)
            if poly.nvars != nvars:
                raise ValueError("coefficient arity mismatch")
            s.coeffs[n] = poly
        return s

    # -- queries ----------------------------------------------------------

    def coeff(self, n):
        """The LaurentPoly multiplying t^n."""
        if not 0 <= n <= self.order:
            raise ValueError(f"t-power {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def coeff_at(self, n, exps):
        """Scalar coefficient of t^n x^i (y^j)."""
        return self.coeff(n).coeff(exps)

    @property
    def is_zero(self):
        return all(p.is_zero for p in self.coeffs)

    @property
    def is_x_free(self):
        return all(p.is_constant for p in self.coeffs)

    def scalars(self):
        """Coefficient list of an x-free series, as plain numbers."""
        if not self.is_x_free:
            raise ValueError("series has non-constant coefficients")
        return [p.constant_term() for p in self.coeffs]

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable arity mismatch")
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch ({self.order} vs {other.order})"
            )

    def _require_unit(self):
        if not self.coeffs[0].is_one:
            raise ValueError("series must have constant term 1")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = TSeries.t_term(self.order, self.nvars, 0, other)
        elif not isinstance(other, TSeries):
            return NotImplemented
        self._check(other)
        return TSeries(
            self.order, self.nvars,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = TSeries.t_term(self.order, self.nvars, 0, other)
        elif not isinstance(other, TSeries):
            return NotImplemented
        self._check(other)
        return TSeries(
            self.order, self.nvars,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TSeries(self.order, self.nvars, [-p for p in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return TSeries(self.order, self.nvars, [p * other for p in self.coeffs])
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check(other)
        n, nv = self.order, self.nvars
        a = [p.coeffs for p in self.coeffs]
        b = [p.coeffs for p in other.coeffs]
        out = []
        for m in range(n + 1):
            acc = {}
            for k in range(m + 1):
                if a[k] and b[m - k]:
                    _padd_into(acc, _pmul(a[k], b[m - k], nv))
            out.append(LaurentPoly._raw(nv, _clean(acc)))
        return TSeries(n, nv, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative series power; use inverse() first")
        out = TSeries.one(self.order, self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse; requires constant term 1."""
        self._require_unit()
        n, nv = self.order, self.nvars
        f = [p.coeffs for p in self.coeffs]
        g = [{LaurentPoly._zero_key(nv): 1}]
        for m in range(1, n + 1):
            acc = {}
            for k in range(1, m + 1):
                if f[k]:
                    _padd_into(acc, _pmul(f[k], g[m - k], nv), -1)
            g.append(acc)
        return TSeries(n, nv, [LaurentPoly._raw(nv, _clean(d)) for d in g])

    def log(self):
        """Series logarithm, computed as the termwise integral of f'/f.

        Requires constant term 1.  The integration divides the t^n
        coefficient by n, which is where rational coefficients enter."""
        self._require_unit()
        n, nv = self.order, self.nvars
        inv = [p.coeffs for p in self.inverse().coeffs]
        # derivative: coefficient of t^(m-1) in f' is m*f[m]
        out = [LaurentPoly.zero(nv)]
        for m in range(1, n + 1):
            acc = {}
            for k in range(1, m + 1):
                fk = self.coeffs[k].coeffs
                if fk:
                    _padd_into(acc, _pmul(fk, inv[m - k], nv), k)
            out.append(LaurentPoly._raw(nv, {e: _div_exact(c, m) for e, c in acc.items() if c}))
        return TSeries(n, nv, out)

    def exp(self):
        """Series exponential; requires constant term 0.

        Uses the recurrence n*g[n] = sum_k k*f[k]*g[n-k] obtained from
        g' = f'*g."""
        if not self.coeffs[0].is_zero:
            raise ValueError("series must have constant term 0")
        n, nv = self.order, self.nvars
        f = [p.coeffs for p in self.coeffs]
        g = [{LaurentPoly._zero_key(nv): 1}]
        for m in range(1, n + 1):
            acc = {}
            for k in range(1, m + 1):
                if f[k]:
                    _padd_into(acc, _pmul(f[k], g[m - k], nv), k)
            g.append({e: _div_exact(c, m) for e, c in acc.items() if c})
        return TSeries(n, nv, [LaurentPoly._raw(nv, _clean(d)) for d in g])

    def sqrt(self):
        """Square root with constant term +1; requires constant term 1."""
        self._require_unit()
        n, nv = self.order, self.nvars
        half = Fraction(1, 2)
        g = [{LaurentPoly._zero_key(nv): 1}]
        for m in range(1, n + 1):
            acc = dict(self.coeffs[m].coeffs)
            for k in range(1, m):
                _padd_into(acc, _pmul(g[k], g[m - k], nv), -1)
            g.append({e: _norm(c * half) for e, c in acc.items() if c})
        return TSeries(n, nv, [LaurentPoly._raw(nv, _clean(d)) for d in g])

    # -- extraction and substitution --------------------------------------

    def extract_x(self, i):
        """The series in t whose t^n coefficient is the x^i coefficient
        of this series' t^n coefficient (an x-free one-variable series).
        Absent exponents yield 0."""
        if self.nvars != 1:
            raise ValueError("extract_x expects a one-variable series")
        return TSeries(
            self.order, 1,
            [LaurentPoly.const(1, p.coeff(i)) for p in self.coeffs],
        )

    def extract_y(self, j):
        """Coefficient of y^j, as a one-variable series in x."""
        if self.nvars != 2:
            raise ValueError("extract_y expects a two-variable series")
        return TSeries(self.order, 1, [p.extract_second(j) for p in self.coeffs])

    def eval_ones(self):
        """Substitute 1 for every Laurent variable, keeping t."""
        return TSeries(
            self.order, 1,
            [LaurentPoly.const(1, p.subs_ones()) for p in self.coeffs],
        )

    def invert_x(self):
        """Substitute x -> 1/x in every coefficient."""
        return TSeries(self.order, self.nvars, [p.invert_var(0) for p in self.coeffs])

    def lift(self):
        """Embed a one-variable series as a y-free two-variable series."""
        return TSeries(self.order, 2, [p.lift() for p in self.coeffs])

    def shift_up(self, k=1):
        """Multiply by t^k at fixed truncation order (top terms drop off)."""
        if k < 0:
            raise ValueError("shift_up wants k >= 0")
        zero = [LaurentPoly.zero(self.nvars)] * min(k, self.order + 1)
        return TSeries(
            self.order, self.nvars,
            (zero + self.coeffs)[: self.order + 1],
        )

    def shift_down(self, k=1):
        """Divide exactly by t^k; the low k coefficients must vanish.
        The result is truncated at order - k."""
        if k < 0 or k > self.order:
            raise ValueError("shift_down wants 0 <= k <= order")
        if any(not p.is_zero for p in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by t^{k}")
        return TSeries(self.order - k, self.nvars, self.coeffs[k:])

    def truncate(self, order):
        """Explicitly lower the truncation order."""
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TSeries(order, self.nvars, self.coeffs[: order + 1])

    def subst_t_power(self, m):
        """Substitute t -> t^m; the result keeps this series' order.

        Only the coefficients up to floor(order/m) contribute."""
        if m < 1:
            raise ValueError("need m >= 1")
        s = TSeries(self.order, self.nvars)
        for n in range(self.order // m + 1):
            if n * m <= self.order:
                s.coeffs[n * m] = self.coeffs[n]
        return s

    # -- misc -------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, TSeries)
            and self.order == other.order
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self):
        parts = []
        for n, p in enumerate(self.coeffs):
            if p.is_zero:
                continue
            if len(parts) >= 6:
                parts.append("...")
                break
            parts.append(f"({p!r})*t^{n}" if n else repr(p))
        body = " + ".join(parts) if parts else "0"
        return f"<TSeries mod t^{self.order + 1}: {body}>"


def first_difference(f, g):
    """Smallest t-power where two series differ, or None if equal.

    Orders and arity must match; this is a comparison helper, not a ring
    operation."""
    f._check(g)
    for n in range(f.order + 1):
        if f.coeffs[n] != g.coeffs[n]:
            return n
    return None


def fixed_point(func, order, nvars=1):
    """Unique series f with f = func(f) mod t^(order+1).

    func must be a contraction for the t-adic metric: whenever f and g
    agree mod t^k, func(f) and func(g) agree mod t^(k+1).  Iteration from
    the zero series then gains at least one exact coefficient per step, so
    order+1 iterations suffice.  A functional that fails to converge in
    that many steps is rejected."""
    f = TSeries.zero(order, nvars)
    for _ in range(order + 1):
        g = func(f)
        if g == f:
            return f
        f = g
    if func(f) == f:
        return f
    raise ValueError("functional is not a t-adic contraction (no convergence)")
