"""Step sets, the kernel polynomial, and direct dynamic-programming counts.

The slit plane is the square lattice with the half-line
H = {(k, 0) : k <= 0} removed for every vertex of a walk except its
starting point.  This module counts walks straight from that definition:
plain walks, slit-plane walks, loops (returns to the origin avoiding the
strictly negative x-axis), bridges (walks whose first visit to H is their
final vertex), and bilateral walks (walks ending on the x-axis).

The DP tables are the package's ground truth: every generating-series
result is cross-checked against them.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .series import LaurentPoly, TSeries


class Domain(enum.Enum):
    """Where walks are allowed to live."""

    FULL_PLANE = "full"
    UPPER_HALF_PLANE = "upper"


class Constraint(enum.Enum):
    """Extra condition imposed on every vertex after the start."""

    NONE = "none"
    AVOID_SLIT = "avoid-slit"


class CrossCheckError(RuntimeError):
    """Two independent routes to the same quantity disagreed (internal bug)."""


def _on_slit(i, j):
    return j == 0 and i <= 0


def _on_negative_axis(i, j):
    return j == 0 and i < 0


@dataclass(frozen=True)
class StepSet:
    """A finite set of integer steps (di, dj), order-preserving and duplicate-free.

    a and b are the largest horizontal and vertical reaches; after n steps
    every reachable point lies in the box |i| <= n*a, |j| <= n*b.
    """

    steps: tuple
    name: str | None = None

    def __post_init__(self):
        steps = tuple((int(di), int(dj)) for di, dj in self.steps)
        if not steps:
            raise ValueError("a step set must be nonempty")
        if len(set(steps)) != len(steps):
            raise ValueError("duplicate steps in step set")
        if (0, 0) in steps:
            warnings.warn("step set contains the zero step (0, 0)", stacklevel=3)
        object.__setattr__(self, "steps", steps)

    @property
    def a(self):
        return max(abs(di) for di, _ in self.steps)

    @property
    def b(self):
        return max(abs(dj) for _, dj in self.steps)

    @property
    def max_down(self):
        return max((-dj for _, dj in self.steps), default=0)

    def reversed(self):
        """The step set with every step negated (an involution)."""
        return StepSet(tuple((-di, -dj) for di, dj in self.steps))

    def is_small_height(self):
        """True when no step changes the ordinate by more than one."""
        return all(abs(dj) <= 1 for _, dj in self.steps)

    @classmethod
    def parse(cls, text):
        """Parse the textual format "di,dj;di,dj;..." into a step set."""
        steps = []
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            pieces = part.split(",")
            if len(pieces) != 2:
                raise ValueError(f"bad step {part!r}: want 'di,dj'")
            try:
                steps.append((int(pieces[0]), int(pieces[1])))
            except ValueError:
                raise ValueError(f"bad step {part!r}: want integers") from None
        return cls(tuple(steps))

    @classmethod
    def preset(cls, name):
        """Named models: square, diagonal, triangular, spider:k (k >= 1)."""
        key = name.strip().lower()
        if key in _PRESETS:
            return cls(_PRESETS[key], name=key)
        if key.startswith("spider:"):
            try:
                k = int(key.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad spider preset {name!r}") from None
            if k < 1:
                raise ValueError("spider:k needs k >= 1")
            return cls(((1, k), (-1, k), (1, -1), (-1, -1)), name=key)
        raise ValueError(f"unknown preset {name!r}")

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<StepSet{label} {list(self.steps)}>"


_PRESETS = {
    "square": ((0, 1), (1, 0), (0, -1), (-1, 0)),
    "diagonal": ((1, 1), (1, -1), (-1, 1), (-1, -1)),
    "triangular": ((0, 1), (1, 0), (1, 1), (0, -1), (-1, 0), (-1, -1)),
}


def reverse(steps):
    """Negate every step of a StepSet."""
    return steps.reversed()


class CountTable:
    """Exact walk counts: layers[n] maps an endpoint (i, j) to the number
    of admissible walks of length n ending there."""

    def __init__(self, layers):
        self.layers = [dict(layer) for layer in layers]

    @property
    def n_max(self):
        return len(self.layers) - 1

    def count(self, n, i, j):
        return self.layers[n].get((i, j), 0)

    def layer(self, n):
        return self.layers[n]

    def total(self, n):
        return sum(self.layers[n].values())

    def __eq__(self, other):
        return isinstance(other, CountTable) and self.layers == other.layers


def _vertex_allowed(i, j, domain, constraint):
    if domain is Domain.UPPER_HALF_PLANE and j < 0:
        return False
    if constraint is Constraint.AVOID_SLIT and _on_slit(i, j):
        return False
    return True


def count_walks(steps, domain, constraint, n_max):
    """Count walks of every length up to n_max by dynamic programming.

    The constraint and the domain restriction apply to every vertex after
    the starting one; the start (0, 0) itself is always exempt.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    layer = {(0, 0): 1}
    layers = [layer]
    for _ in range(n_max):
        new = {}
        for (i, j), c in layer.items():
            for di, dj in steps.steps:
                p = (i + di, j + dj)
                if _vertex_allowed(p[0], p[1], domain, constraint):
                    new[p] = new.get(p, 0) + c
        layers.append(new)
        layer = new
    return CountTable(layers)


def count_loops(steps, n_max, domain=Domain.FULL_PLANE):
    """Counts of loops: walks returning to the origin whose vertices all
    avoid the strictly negative x-axis.  Returns the sequence indexed by
    length (length 0 contributes the empty loop)."""
    layer = {(0, 0): 1}
    out = [1]
    for _ in range(n_max):
        new = {}
        for (i, j), c in layer.items():
            for di, dj in steps.steps:
                p = (i + di, j + dj)
                if _on_negative_axis(p[0], p[1]):
                    continue
                if domain is Domain.UPPER_HALF_PLANE and p[1] < 0:
                    continue
                new[p] = new.get(p, 0) + c
        out.append(new.get((0, 0), 0))
        layer = new
    return out


def count_bridges(steps, n_max):
    """Counts of bridges: nonempty walks that end on the half-line H but
    avoid it at every earlier vertex.  Endpoints have j = 0, i <= 0."""
    layer = {(0, 0): 1}
    layers = [{}]
    for _ in range(n_max):
        new = {}
        bridges = {}
        for (i, j), c in layer.items():
            for di, dj in steps.steps:
                p = (i + di, j + dj)
                if _on_slit(p[0], p[1]):
                    bridges[p] = bridges.get(p, 0) + c
                else:
                    new[p] = new.get(p, 0) + c
        layers.append(bridges)
        layer = new
    return CountTable(layers)


def count_refined(steps, marked, domain, constraint, n_max):
    """Walk counts refined by the number of marked steps used.

    marked must be a subset of the step set.  The result is a list indexed
    by length whose entries map (i, j, m) -> number of walks ending at
    (i, j) that use exactly m marked steps.
    """
    marked = tuple(marked)
    if any(s not in steps.steps for s in marked):
        raise ValueError("marked steps must form a subset of the step set")
    marked_set = set(marked)
    layer = {(0, 0, 0): 1}
    layers = [dict(layer)]
    for _ in range(n_max):
        new = {}
        for (i, j, m), c in layer.items():
            for step in steps.steps:
                p = (i + step[0], j + step[1])
                if not _vertex_allowed(p[0], p[1], domain, constraint):
                    continue
                key = (p[0], p[1], m + (step in marked_set))
                new[key] = new.get(key, 0) + c
        layers.append(new)
        layer = new
    return layers


def kernel(steps, order):
    """The kernel polynomial 1 - t * sum of x^di y^dj over the step set,
    embedded as a two-variable series of the given truncation order."""
    poly = {}
    for di, dj in steps.steps:
        poly[(di, dj)] = poly.get((di, dj), 0) - 1
    k = TSeries(order, 2)
    k.coeffs[0] = LaurentPoly.const(2, 1)
    if order >= 1:
        k.coeffs[1] = LaurentPoly(2, poly)
    return k


def step_polynomial(steps):
    """Sum of x^di y^dj over the step set."""
    poly = {}
    for di, dj in steps.steps:
        poly[(di, dj)] = poly.get((di, dj), 0) + 1
    return LaurentPoly(2, poly)


def vertical_projection(steps, j):
    """Sum of x^di over the steps with dj = j, as a one-variable polynomial."""
    poly = {}
    for di, dj in steps.steps:
        if dj == j:
            poly[di] = poly.get(di, 0) + 1
    return LaurentPoly(1, poly)


def bilateral_series(steps, order):
    """Generating series for bilateral walks (walks ending on the x-axis),
    as a one-variable series in x.

    Computed twice: as the y-constant term of the inverse kernel, and by
    projecting the DP table onto the axis.  Disagreement would mean an
    internal bug, so it is fatal.
    """
    via_kernel = kernel(steps, order).inverse().extract_y(0)
    table = count_walks(steps, Domain.FULL_PLANE, Constraint.NONE, order)
    coeffs = []
    for n in range(order + 1):
        coeffs.append(
            LaurentPoly(1, {i: c for (i, j), c in table.layer(n).items() if j == 0})
        )
    via_dp = TSeries(order, 1, coeffs)
    if via_kernel != via_dp:
        raise CrossCheckError(
            "bilateral series: kernel route and DP route disagree"
        )
    return via_kernel


def within_step_box(series, steps):
    """Check the reachability bound: the t^n coefficient of a kernel-derived
    series only involves x-exponents in [-n*a, n*a] (and y-exponents in
    [-n*b, n*b] for two-variable series)."""
    a, b = steps.a, steps.b
    for n, p in enumerate(series.coeffs):
        if series.nvars == 1:
            if not p.exponents_in(-n * a, n * a):
                return False
        else:
            if not p.exponents_in(-n * a, n * a, var=0):
                return False
            if not p.exponents_in(-n * b, n * b, var=1):
                return False
    return True
