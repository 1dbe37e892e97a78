"""Certified evaluation of the degree-based bounds on P_G(lam).

All bound values are returned as enclosures of their natural logarithm.  Each
factor ``base ** (1/k)`` is computed as ``log(base) / k`` where ``base`` is an
exact rational, so rounding happens once per distinct factor.

Equality is always decided structurally (clique unions for the lower bound,
complete-bipartite unions for the upper bound); the intervals are only asked to
be consistent with that decision.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .graph_core import (
    Bigraph,
    Graph,
    degree_degree_distribution,
    double_cover,
    is_union_cliques,
    is_union_complete_bipartite,
)
from .intervals import DEFAULT_PREC, MAX_PREC, Interval, log_rational, to_fraction
from .polycount import DEFAULT_BUDGET, count, isp


class Status(str, enum.Enum):
    HOLDS = "Holds"
    EQUALITY = "HoldsWithEquality"
    VIOLATED = "Violated"
    INDETERMINATE = "Indeterminate"


_SEVERITY = {Status.EQUALITY: 0, Status.HOLDS: 1, Status.INDETERMINATE: 2, Status.VIOLATED: 3}


@dataclass
class Verdict:
    """Outcome of one inequality check.

    ``margin`` encloses log(claimed-larger side / claimed-smaller side) unless
    a check documents otherwise; ``strict`` is set only when the enclosures
    separate.
    """

    status: Status
    margin: Interval | None = None
    witness: dict | None = None
    strict: bool = False
    precision_bits: int = DEFAULT_PREC
    checked: int = 1

    def __post_init__(self):
        if self.status is Status.VIOLATED and not self.witness:
            raise ValueError("a Violated verdict needs a witness")

    @property
    def ok(self) -> bool:
        return self.status in (Status.HOLDS, Status.EQUALITY)


def aggregate(verdicts, empty_status: Status = Status.HOLDS) -> Verdict:
    """Fold many verdicts: Violated dominates, then Indeterminate, then Holds.

    The result is HoldsWithEquality only if every input is; it is strict only
    if every non-equality input is strict.
    """
    verdicts = list(verdicts)
    if not verdicts:
        return Verdict(empty_status, checked=0)
    worst = max(verdicts, key=lambda v: _SEVERITY[v.status])
    status = worst.status
    non_eq = [v for v in verdicts if v.status is not Status.EQUALITY]
    strict = bool(non_eq) and all(v.strict for v in non_eq)
    prec = max(v.precision_bits for v in verdicts)
    witness = worst.witness if status in (Status.VIOLATED, Status.INDETERMINATE) else None
    return Verdict(status, worst.margin, witness, strict, prec, checked=len(verdicts))


def compare(smaller: Interval, larger: Interval, equality: bool) -> tuple[Status, bool]:
    """Classify the claim ``smaller <= larger``.

    With ``equality`` the two sides are known to be equal, so the enclosures
    must overlap; otherwise the claim is strict and needs separation.
    Returns ``(status, strict)``.
    """
    if equality:
        return (Status.EQUALITY, False) if smaller.overlaps(larger) else (Status.VIOLATED, False)
    if smaller.certainly_lt(larger):
        return Status.HOLDS, True
    if smaller.certainly_gt(larger):
        return Status.VIOLATED, False
    return Status.INDETERMINATE, False


def escalate(run: Callable[[int], Verdict], prec: int = DEFAULT_PREC,
             max_prec: int = MAX_PREC) -> Verdict:
    """Re-run ``run(prec)`` at doubled precision while it is Indeterminate."""
    while True:
        verdict = run(prec)
        if verdict.status is not Status.INDETERMINATE or prec >= max_prec:
            return verdict
        prec = min(2 * prec, max_prec)


def _positive(x, name: str) -> Fraction:
    x = to_fraction(x)
    if x <= 0:
        raise ValueError(f"{name} must be positive, got {x}")
    return x


# bound values -----------------------------------------------------------

def upper_bound_log(g: Graph, lam, prec: int = DEFAULT_PREC) -> Interval:
    """log of (1+lam)^iso * prod_{uv} ((1+lam)^du + (1+lam)^dv - 1)^(1/(du dv))."""
    lam = _positive(lam, "lambda")
    t = 1 + lam
    total = log_rational(t, prec) * g.iso()
    for (a, b), mult in sorted(degree_degree_distribution(g).items()):
        total = total + log_rational(t**a + t**b - 1, prec) * Fraction(mult, a * b)
    return total


def upper_bound_bivariate_log(b: Bigraph, lam, mu, prec: int = DEFAULT_PREC) -> Interval:
    """log P^+_G(lam, mu).

    For an edge (u, v) with u in A and v in B the factor is
    ((1+mu)^d_u + (1+lam)^d_v - 1)^(1/(d_u d_v)); isolated A-vertices give
    (1+lam) and isolated B-vertices give (1+mu).
    """
    lam = _positive(lam, "lambda")
    mu = _positive(mu, "mu")
    tl, tm = 1 + lam, 1 + mu
    da, db = b.degrees_a(), b.degrees_b()
    total = log_rational(tl, prec) * da.count(0) + log_rational(tm, prec) * db.count(0)
    pairs = Counter((da[u], db[v]) for u, v in b.edges)
    for (du, dv), mult in sorted(pairs.items()):
        total = total + log_rational(tm**du + tl**dv - 1, prec) * Fraction(mult, du * dv)
    return total


def lower_bound_log(g: Graph, lam, prec: int = DEFAULT_PREC) -> Interval:
    """log of prod_v ((d_v+1) lam + 1)^(1/(d_v+1))."""
    lam = _positive(lam, "lambda")
    total = Interval.exact(0, prec)
    for d, mult in sorted(Counter(g.degrees()).items()):
        total = total + log_rational((d + 1) * lam + 1, prec) * Fraction(mult, d + 1)
    return total


def regular_bounds(n: int, d: int, lam, prec: int = DEFAULT_PREC) -> tuple[Interval, Interval]:
    """(lower, upper) log-enclosures for an n-vertex d-regular graph:
    ((d+1) lam + 1)^(n/(d+1)) and (2(1+lam)^d - 1)^(n/(2d))."""
    lam = _positive(lam, "lambda")
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if d == 0:
        v = log_rational(1 + lam, prec) * n
        return v, v
    lower = log_rational((d + 1) * lam + 1, prec) * Fraction(n, d + 1)
    upper = log_rational(2 * (1 + lam) ** d - 1, prec) * Fraction(n, 2 * d)
    return lower, upper


# sandwich ---------------------------------------------------------------

@dataclass
class SandwichReport:
    exact_log: Interval
    lower_log: Interval
    upper_log: Interval
    lower_equality: bool
    upper_equality: bool
    lam: Fraction
    exact: Fraction
    status: Status
    lower_status: Status
    upper_status: Status
    precision_bits: int = DEFAULT_PREC
    witness: dict = field(default_factory=dict)


def sandwich(g: Graph, lam, prec: int = DEFAULT_PREC, budget: int = DEFAULT_BUDGET,
             max_prec: int = MAX_PREC) -> SandwichReport:
    """Compare the exact P_G(lam) against both bounds."""
    lam = _positive(lam, "lambda")
    exact = isp(g, budget)(lam)
    low_eq = is_union_cliques(g)
    up_eq = is_union_complete_bipartite(g)
    while True:
        ex = log_rational(exact, prec)
        lo = lower_bound_log(g, lam, prec)
        up = upper_bound_log(g, lam, prec)
        ls, _ = compare(lo, ex, low_eq)
        us, _ = compare(ex, up, up_eq)
        status = max((ls, us), key=_SEVERITY.__getitem__)
        if status is not Status.INDETERMINATE or prec >= max_prec:
            break
        prec = min(2 * prec, max_prec)
    witness = {}
    if status in (Status.VIOLATED, Status.INDETERMINATE):
        witness = {"lower": ls.value, "upper": us.value}
    return SandwichReport(ex, lo, up, low_eq, up_eq, lam, exact,
                          Status.HOLDS if status is Status.EQUALITY else status,
                          ls, us, prec, witness)


# induction steps --------------------------------------------------------

def check_induction_upper(b: Bigraph, w: int, lam, mu, prec: int = DEFAULT_PREC,
                          max_prec: int = MAX_PREC) -> Verdict:
    """P^+(G) >= P^+(G - w) + lam * P^+(G - w - N(w)) for w in A of maximum degree."""
    lam = _positive(lam, "lambda")
    mu = _positive(mu, "mu")
    if not 0 <= w < b.a_size:
        raise ValueError(f"w={w} is not an A-vertex")
    g = b.to_graph()
    if not g.is_connected():
        raise ValueError("bigraph must be connected")
    dw = g.degree(w)
    if dw != g.max_degree():
        raise ValueError(f"w={w} has degree {dw}, not the maximum {g.max_degree()}")
    if dw < 2:
        raise ValueError("maximum degree must be at least 2")
    minus_w = b.delete(a_gone=[w])
    minus_nw = b.delete(a_gone=[w], b_gone=b.neighbors_a(w))
    equality = is_union_complete_bipartite(g)
    witness = {"w": w, "lambda": str(lam), "mu": str(mu)}

    def run(p: int) -> Verdict:
        big = upper_bound_bivariate_log(b, lam, mu, p)
        rest = (upper_bound_bivariate_log(minus_w, lam, mu, p).exp()
                + upper_bound_bivariate_log(minus_nw, lam, mu, p).exp() * lam)
        small = rest.log()
        status, strict = compare(small, big, equality)
        return Verdict(status, big - small, witness, strict, p)

    return escalate(run, prec, max_prec)


def check_induction_lower(g: Graph, w: int, lam, prec: int = DEFAULT_PREC,
                          max_prec: int = MAX_PREC) -> Verdict:
    """P^-(G - w) + lam * P^-(G - w - N(w)) >= P^-(G) for w of maximum degree."""
    lam = _positive(lam, "lambda")
    if not 0 <= w < g.n:
        raise ValueError(f"no vertex {w}")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.degree(w) != g.max_degree():
        raise ValueError(f"w={w} has degree {g.degree(w)}, not the maximum {g.max_degree()}")
    minus_w = g.delete([w])
    minus_nw = g.delete([w, *g.neighbors(w)])
    equality = is_union_cliques(g)
    witness = {"w": w, "lambda": str(lam)}

    def run(p: int) -> Verdict:
        small = lower_bound_log(g, lam, p)
        big = (lower_bound_log(minus_w, lam, p).exp()
               + lower_bound_log(minus_nw, lam, p).exp() * lam).log()
        status, strict = compare(small, big, equality)
        return Verdict(status, big - small, witness, strict, p)

    return escalate(run, prec, max_prec)


def check_double_cover(g: Graph, prec: int = DEFAULT_PREC,
                       budget: int = DEFAULT_BUDGET) -> Verdict:
    """i(G)^2 <= i(G x K_2), decided with exact integers.

    The degree-based upper bound is squared by the cover; this is certified
    structurally by comparing degree-pair multisets and isolated-vertex counts.
    ``margin`` encloses log(i(cover) / i(G)^2).
    """
    cover = double_cover(g).to_graph()
    ig = count(g, budget)
    ic = count(cover, budget)
    ddd = degree_degree_distribution(g)
    doubled = Counter({k: 2 * v for k, v in ddd.items()})
    j_identity = degree_degree_distribution(cover) == doubled and cover.iso() == 2 * g.iso()
    bipartite = g.is_bipartite()
    witness = {"i_G": ig, "i_cover": ic, "bipartite": bipartite, "j_identity": j_identity}
    margin = log_rational(Fraction(ic, ig * ig), prec)
    if ig * ig > ic or not j_identity or (bipartite and ig * ig != ic):
        return Verdict(Status.VIOLATED, margin, witness, False, prec)
    if ig * ig == ic:
        return Verdict(Status.EQUALITY, margin, witness, False, prec)
    return Verdict(Status.HOLDS, margin, witness, True, prec)
