"""Grid certification of the scalar inequalities behind the bound proofs.

Every grid coordinate is an exact rational, so each expression starts from
exact data and is evaluated once in outward-rounded interval arithmetic.
Monotonicity claims are certified by comparing neighbouring grid values.

Per-point outcome rules:

* a point known to be an equality case must give overlapping enclosures;
* a strict claim needs separated enclosures (precision is doubled on overlap,
  and the point is Indeterminate if the cap is reached);
* a non-strict claim holds unless the enclosures are separated the wrong
  way; it is reported strict only when they separate the right way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable

from .bounds import Status, Verdict, aggregate
from .intervals import DEFAULT_PREC, MAX_PREC, Interval, log_rational, rational_power, to_fraction

DEFAULT_STEPS = 64
_GEOM_DENOM = 2**32


@dataclass(frozen=True)
class Axis:
    """``steps`` exact-rational points from ``lo`` to ``hi`` inclusive.

    A geometric axis spaces points by a constant ratio, each rounded to a
    multiple of 2^-32 (endpoints kept exact).  ``lo == hi`` with ``steps == 1``
    is a degenerate single-point axis.
    """

    lo: Fraction
    hi: Fraction
    steps: int = DEFAULT_STEPS
    scale: str = "linear"

    def __post_init__(self):
        object.__setattr__(self, "lo", to_fraction(self.lo))
        object.__setattr__(self, "hi", to_fraction(self.hi))
        if self.scale not in ("linear", "geometric"):
            raise ValueError(f"unknown scale {self.scale!r}")
        if self.lo == self.hi and self.steps == 1:
            return
        if not self.lo < self.hi:
            raise ValueError("axis needs lo < hi")
        if self.steps < 2:
            raise ValueError("axis needs at least 2 steps")
        if self.scale == "geometric" and self.lo <= 0:
            raise ValueError("geometric axis needs lo > 0")

    def points(self) -> list[Fraction]:
        if self.steps == 1:
            return [self.lo]
        n = self.steps - 1
        if self.scale == "linear":
            return [self.lo + (self.hi - self.lo) * Fraction(i, n) for i in range(n + 1)]
        ratio = float(self.hi / self.lo)
        pts = {self.lo, self.hi}
        for i in range(1, n):
            x = float(self.lo) * ratio ** (i / n)
            pts.add(Fraction(round(x * _GEOM_DENOM), _GEOM_DENOM))
        return sorted(p for p in pts if self.lo <= p <= self.hi)


@dataclass(frozen=True)
class GridSpec:
    """Named axes; a lemma reads the axes it needs."""

    axes: tuple

    def __init__(self, **axes: Axis):
        object.__setattr__(self, "axes", tuple(sorted(axes.items())))

    def __getitem__(self, name: str) -> Axis:
        for key, axis in self.axes:
            if key == name:
                return axis
        raise KeyError(f"grid has no axis {name!r}")

    def names(self) -> list[str]:
        return [k for k, _ in self.axes]


def geometric(lo, hi, steps: int = DEFAULT_STEPS) -> Axis:
    return Axis(lo, hi, steps, "geometric")


def linear(lo, hi, steps: int = DEFAULT_STEPS) -> Axis:
    return Axis(lo, hi, steps, "linear")


# per-point comparison ---------------------------------------------------

def _check_point(evaluate: Callable[[int], tuple[Interval, Interval]], witness: dict, *,
                 equality: bool = False, strict: bool = False, want_strict: bool = False,
                 slack: Callable[[int], Interval] | None = None,
                 prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC) -> Verdict:
    """Check ``left <= right`` (``left < right`` if ``strict``) for
    ``evaluate(p) -> (left, right)``.

    ``slack(p)`` widens a non-strict claim to ``left <= right + slack``.
    ``want_strict`` escalates precision on overlap to try to show separation.
    """
    p = prec
    while True:
        left, right = evaluate(p)
        margin = right - left
        if equality:
            if left.overlaps(right):
                return Verdict(Status.EQUALITY, margin, None, False, p)
            return Verdict(Status.VIOLATED, margin,
                           {**witness, "reason": "equality point separated"}, False, p)
        if left.certainly_lt(right):
            return Verdict(Status.HOLDS, margin, None, True, p)
        widened = margin + slack(p) if slack is not None else margin
        if widened.hi < 0:
            return Verdict(Status.VIOLATED, margin, witness, False, p)
        if (strict or want_strict) and p < max_prec:
            p = min(2 * p, max_prec)
            continue
        if strict:
            return Verdict(Status.INDETERMINATE, margin, witness, False, p)
        if widened.lo >= 0:
            return Verdict(Status.HOLDS, margin, None, False, p)
        if p < max_prec:
            p = min(2 * p, max_prec)
            continue
        return Verdict(Status.INDETERMINATE, margin, witness, False, p)


def _fold(verdicts: Iterable[Verdict], extra: dict | None = None) -> Verdict:
    v = aggregate(verdicts)
    if extra:
        v.witness = {**extra, **(v.witness or {})}
    return v


# a1: g(x) decreasing on (0, Delta) -----------------------------------

def _g_a1(delta: int, lam: Fraction, x: Fraction, p: int) -> Interval:
    """(D l+1)^((D-1)/D) (x l+1)^(1/x) + l - ((D+1) l+1)^(D/(D+1)) ((x+1) l+1)^(1/(x+1))."""
    d = delta
    first = (log_rational(d * lam + 1, p) * Fraction(d - 1, d)
             + log_rational(x * lam + 1, p) / x).exp()
    second = (log_rational((d + 1) * lam + 1, p) * Fraction(d, d + 1)
              + log_rational((x + 1) * lam + 1, p) / (x + 1)).exp()
    return first + lam - second


def default_grid_a1(delta: int) -> GridSpec:
    return GridSpec(x=geometric(Fraction(delta, 64), delta))


def check_lemma_a1(delta: int, lam, grid: GridSpec | None = None,
                   prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC) -> Verdict:
    """g is strictly decreasing and positive on the grid points inside (0, D),
    and g(D) encloses 0."""
    if delta < 1:
        raise ValueError("Delta must be >= 1")
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    grid = grid or default_grid_a1(delta)
    xs = grid["x"].points()
    if any(x <= 0 or x > delta for x in xs):
        raise ValueError("grid for the a1 check must lie in (0, Delta]")
    interior = [x for x in xs if x < delta]
    params = {"lemma": "a1", "Delta": delta, "lambda": str(lam)}
    zero = lambda p: Interval.exact(0, p)  # noqa: E731
    verdicts = []
    for x in interior:
        verdicts.append(_check_point(
            lambda p, x=x: (zero(p), _g_a1(delta, lam, x, p)),
            {**params, "x": str(x), "claim": "g(x) > 0"},
            strict=True, prec=prec, max_prec=max_prec))
    for x0, x1 in zip(interior, interior[1:]):
        verdicts.append(_check_point(
            lambda p, x0=x0, x1=x1: (_g_a1(delta, lam, x1, p), _g_a1(delta, lam, x0, p)),
            {**params, "x0": str(x0), "x1": str(x1), "claim": "g(x0) > g(x1)"},
            strict=True, prec=prec, max_prec=max_prec))
    verdicts.append(_check_point(
        lambda p: (_g_a1(delta, lam, Fraction(delta), p), zero(p)),
        {**params, "x": str(delta), "claim": "g(Delta) = 0"},
        equality=True, prec=prec, max_prec=max_prec))
    return _fold(verdicts, params)


def lemma_a1_endpoint(delta: int, lam, prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of g(Delta), which is exactly 0."""
    return _g_a1(delta, to_fraction(lam), Fraction(delta), prec)


# a2: f(x) nondecreasing --------------------------------------------------

def _log_f_a2(alpha: Fraction, beta: Fraction, lam: Fraction, mu: Fraction,
              x: Fraction, p: int) -> Interval:
    lx = rational_power(1 + lam, x, p) - 1
    num = rational_power(1 + mu, alpha, p) + lx
    den = rational_power(1 + mu, beta, p) + lx
    return num.log() / (alpha * x) - den.log() / (beta * x)


def default_grid_a2() -> GridSpec:
    return GridSpec(x=geometric(Fraction(1, 8), 8))


def check_lemma_a2(alpha, beta, lam, mu, grid: GridSpec | None = None,
                   prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC) -> Verdict:
    """f(x) = ((1+mu)^a + (1+lam)^x - 1)^(1/(a x)) / ((1+mu)^b + (1+lam)^x - 1)^(1/(b x))
    is nondecreasing: f(x_i) <= f(x_{i+1}) (1 + 2^(-prec+10)) on the grid.

    f is constant when a = b, mu = 0 or lam = 0; those grids are equality cases.
    """
    alpha, beta, lam, mu = (to_fraction(v) for v in (alpha, beta, lam, mu))
    if not 0 < alpha <= beta:
        raise ValueError("need beta >= alpha > 0")
    if lam < 0 or mu < 0:
        raise ValueError("lambda and mu must be nonnegative")
    grid = grid or default_grid_a2()
    xs = grid["x"].points()
    if any(x <= 0 for x in xs):
        raise ValueError("grid for the a2 check must lie in (0, inf)")
    constant = alpha == beta or mu == 0 or lam == 0
    params = {"lemma": "a2", "alpha": str(alpha), "beta": str(beta),
              "lambda": str(lam), "mu": str(mu)}

    def slack(p: int) -> Interval:
        return log_rational(1 + Fraction(1, 2 ** (p - 10)), p)

    verdicts = [
        _check_point(
            lambda p, x0=x0, x1=x1: (_log_f_a2(alpha, beta, lam, mu, x0, p),
                                     _log_f_a2(alpha, beta, lam, mu, x1, p)),
            {**params, "x0": str(x0), "x1": str(x1)},
            equality=constant, slack=slack, prec=prec, max_prec=max_prec)
        for x0, x1 in zip(xs, xs[1:])
    ]
    return _fold(verdicts, params)


# a3: three-parameter inequality ----------------------------------------

def _a3_sides(c1: Fraction, c2: Fraction, u: Fraction, v: Fraction, w: Fraction,
              p: int) -> tuple[Interval, Interval]:
    t1, t2 = 1 + c1, 1 + c2
    t1_v = rational_power(t1, v, p)
    t1_v1 = rational_power(t1, v - 1, p)
    t2_u = rational_power(t2, u, p)
    t2_w = rational_power(t2, w, p)
    lhs = rational_power(t1, (v - 1) * w / u, p) * c1 + (t1_v1 + t2_u - 1) ** (w / u)
    rhs = (t1_v + t2_u - 1) ** (w * (v - 1) / (u * v)) * (t1_v + t2_w - 1) ** (1 / v)
    return lhs, rhs


def lemma_a3_sides(c1, c2, u, v, w, prec: int = DEFAULT_PREC) -> tuple[Interval, Interval]:
    """Enclosures of (LHS, RHS) at one point."""
    c1, c2, u, v, w = (to_fraction(t) for t in (c1, c2, u, v, w))
    return _a3_sides(c1, c2, u, v, w, prec)


def default_grid_a3(w_max=6) -> GridSpec:
    """w geometric on [1, w_max]; u and v placed by their fraction of the way
    from 1 to w (``su``, ``sv`` linear on [0, 1])."""
    w_max = to_fraction(w_max)
    w_axis = geometric(1, w_max) if w_max > 1 else Axis(1, 1, 1)
    return GridSpec(w=w_axis, su=linear(0, 1, 8), sv=linear(0, 1, 8))


def a3_points(grid: GridSpec) -> list[tuple[Fraction, Fraction, Fraction]]:
    pts = set()
    for w, su, sv in product(grid["w"].points(), grid["su"].points(), grid["sv"].points()):
        pts.add((1 + su * (w - 1), 1 + sv * (w - 1), w))
    return sorted(pts)


def check_lemma_a3(c1, c2, grid: GridSpec | None = None, points=None,
                   prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC) -> Verdict:
    """LHS <= RHS at every (u, v, w) with 1 <= u, v <= w; overlap at the
    equality cases v = 1, w = u, c1 c2 = 0; strictness reported elsewhere
    when the enclosures separate.  ``points`` overrides the grid."""
    c1, c2 = to_fraction(c1), to_fraction(c2)
    if c1 < 0 or c2 < 0:
        raise ValueError("c1, c2 must be nonnegative")
    if points is None:
        points = a3_points(grid or default_grid_a3())
    params = {"lemma": "a3", "c1": str(c1), "c2": str(c2)}
    verdicts = []
    for u, v, w in points:
        u, v, w = to_fraction(u), to_fraction(v), to_fraction(w)
        if not (1 <= u <= w and 1 <= v <= w):
            raise ValueError(f"point (u={u}, v={v}, w={w}) violates 1 <= u, v <= w")
        eq = v == 1 or w == u or c1 * c2 == 0
        verdicts.append(_check_point(
            lambda p, u=u, v=v, w=w: _a3_sides(c1, c2, u, v, w, p),
            {**params, "u": str(u), "v": str(v), "w": str(w)},
            equality=eq, want_strict=True, prec=prec, max_prec=max_prec))
    return _fold(verdicts, params)


# power monotonicity -----------------------------------------------------

def default_grid_power() -> GridSpec:
    axis = geometric(Fraction(1, 8), 8)
    return GridSpec(a=axis, b=axis)


def check_power_monotone(lam, grid: GridSpec | None = None,
                         prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC) -> Verdict:
    """(a lam + 1)^(1/a) > (b lam + 1)^(1/b) for every grid pair a < b.

    Compared in log form, log(a lam + 1)/a > log(b lam + 1)/b.
    """
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    grid = grid or default_grid_power()
    a_pts, b_pts = grid["a"].points(), grid["b"].points()
    if min(a_pts) <= 0:
        raise ValueError("grid for power monotonicity must be positive")
    params = {"lemma": "power", "lambda": str(lam)}

    def h(x: Fraction, p: int) -> Interval:
        return log_rational(x * lam + 1, p) / x

    verdicts = [
        _check_point(lambda p, a=a, b=b: (h(b, p), h(a, p)),
                     {**params, "a": str(a), "b": str(b)},
                     strict=True, prec=prec, max_prec=max_prec)
        for a, b in product(a_pts, b_pts) if a < b
    ]
    return _fold(verdicts, params)


# Hölder forms -----------------------------------------------------------

def default_grid_holder() -> GridSpec:
    return GridSpec(a=geometric(Fraction(1, 8), 8),
                    b=geometric(Fraction(1, 8), 8),
                    p=linear(0, 1, 9))


def _holder_two_term(a: Fraction, b: Fraction, q: Fraction, p: int):
    """a^q + b  versus  (a + b)^q (1 + b)^(1 - q)."""
    lhs = rational_power(a, q, p) + b
    rhs = rational_power(a + b, q, p) * rational_power(1 + b, 1 - q, p)
    return lhs, rhs


def _holder_product(a: tuple, b: tuple, weights: tuple, p: int):
    """prod a_i^p_i + prod b_i^p_i  versus  prod (a_i + b_i)^p_i."""
    zero = Interval.exact(0, p)
    la, lb, lab = zero, zero, zero
    for ai, bi, wi in zip(a, b, weights):
        if wi:
            la = la + log_rational(ai, p) * wi
            lb = lb + log_rational(bi, p) * wi
            lab = lab + log_rational(ai + bi, p) * wi
    return la.exp() + lb.exp(), lab.exp()


def holder_two_term_sides(a, b, q, prec: int = DEFAULT_PREC):
    return _holder_two_term(to_fraction(a), to_fraction(b), to_fraction(q), prec)


def holder_product_sides(a, b, weights, prec: int = DEFAULT_PREC):
    return _holder_product(tuple(map(to_fraction, a)), tuple(map(to_fraction, b)),
                           tuple(map(to_fraction, weights)), prec)


def _proportional(a: tuple, b: tuple, weights: tuple) -> bool:
    idx = [i for i, w in enumerate(weights) if w]
    return all(a[i] * b[j] == a[j] * b[i] for i, j in combinations(idx, 2))


def _simplex(k: int, denom: int):
    for parts in product(range(denom + 1), repeat=k - 1):
        if sum(parts) <= denom:
            yield tuple(Fraction(x, denom) for x in parts) + (Fraction(denom - sum(parts), denom),)


def _subsample(pts: list, count: int) -> list:
    if len(pts) <= count:
        return pts
    step = (len(pts) - 1) / (count - 1)
    return [pts[round(i * step)] for i in range(count)]


def holder_product_points(grid: GridSpec):
    """Points for the k = 2 and k = 3 product forms, drawn from the grid axes."""
    p_axis = grid["p"].points()
    a2, b2 = _subsample(grid["a"].points(), 4), _subsample(grid["b"].points(), 4)
    for a, b, t in product(product(a2, repeat=2), product(b2, repeat=2), p_axis):
        yield a, b, (t, 1 - t)
    a3, b3 = _subsample(grid["a"].points(), 3), _subsample(grid["b"].points(), 3)
    for a, b, wts in product(product(a3, repeat=3), product(b3, repeat=3), _simplex(3, 4)):
        yield a, b, wts


def check_holder_forms(grid: GridSpec | None = None, prec: int = DEFAULT_PREC,
                       max_prec: int = MAX_PREC) -> Verdict:
    """Both Hölder instances on the grid.

    Two-term form: equality at q in {0, 1}.  Product form: equality when the
    weight is on one index or a, b are proportional on the weight support.
    """
    grid = grid or default_grid_holder()
    a_pts, b_pts, q_pts = grid["a"].points(), grid["b"].points(), grid["p"].points()
    if min(a_pts) <= 0 or min(b_pts) <= 0 or not all(0 <= q <= 1 for q in q_pts):
        raise ValueError("Hölder grid needs a, b > 0 and p in [0, 1]")
    verdicts = []
    for a, b, q in product(a_pts, b_pts, q_pts):
        verdicts.append(_check_point(
            lambda p, a=a, b=b, q=q: _holder_two_term(a, b, q, p),
            {"form": "two-term", "a": str(a), "b": str(b), "p": str(q)},
            equality=q in (0, 1), prec=prec, max_prec=max_prec))
    for a, b, wts in holder_product_points(grid):
        verdicts.append(_check_point(
            lambda p, a=a, b=b, wts=wts: _holder_product(a, b, wts, p),
            {"form": f"product-k{len(a)}", "a": [str(x) for x in a],
             "b": [str(x) for x in b], "p": [str(x) for x in wts]},
            equality=_proportional(a, b, wts), prec=prec, max_prec=max_prec))
    return _fold(verdicts, {"lemma": "holder"})


# suites -----------------------------------------------------------------

PARAM_VALUES = (Fraction(1, 2), Fraction(1), Fraction(2))
DELTAS = range(1, 7)


def run_suite(which: str = "all", steps: int | None = None, prec: int = DEFAULT_PREC,
              max_prec: int = MAX_PREC, params=PARAM_VALUES, deltas=DELTAS) -> dict[str, list[Verdict]]:
    """Run the default parameter sweep for one lemma or all of them.

    ``steps`` overrides the point count of the primary axis of each grid.
    """
    names = ["a1", "a2", "a3", "power", "holder"] if which == "all" else [which]
    out: dict[str, list[Verdict]] = {}
    for name in names:
        if name == "a1":
            out[name] = [
                check_lemma_a1(d, lam, GridSpec(x=geometric(Fraction(d, 64), d, steps))
                               if steps else None, prec, max_prec)
                for d in deltas for lam in params]
        elif name == "a2":
            grid = GridSpec(x=geometric(Fraction(1, 8), 8, steps)) if steps else None
            out[name] = [
                check_lemma_a2(al, be, lam, mu, grid, prec, max_prec)
                for al in deltas for be in deltas if al <= be
                for lam in params for mu in params]
        elif name == "a3":
            grid = default_grid_a3(max(deltas))
            if steps:
                grid = GridSpec(w=geometric(1, max(deltas), steps), su=grid["su"], sv=grid["sv"])
            out[name] = [check_lemma_a3(c1, c2, grid, prec=prec, max_prec=max_prec)
                         for c1 in params for c2 in params]
        elif name == "power":
            grid = None
            if steps:
                axis = geometric(Fraction(1, 8), 8, steps)
                grid = GridSpec(a=axis, b=axis)
            out[name] = [check_power_monotone(lam, grid, prec, max_prec) for lam in params]
        elif name == "holder":
            grid = None
            if steps:
                base = default_grid_holder()
                grid = GridSpec(a=geometric(Fraction(1, 8), 8, steps), b=base["b"], p=base["p"])
            out[name] = [check_holder_forms(grid, prec, max_prec)]
        else:
            raise ValueError(f"unknown lemma {name!r}")
    return out


def relative_width_ok(iv: Interval, prec: int) -> bool:
    """Width of ``iv`` is at most 2^(-prec+10)."""
    return iv.width <= math.ldexp(1, -prec + 10)
