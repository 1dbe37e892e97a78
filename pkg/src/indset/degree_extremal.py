"""Extremes of P_G(lam)^(1/|V|) over graphs with a prescribed degree distribution.

The minimum is attained by disjoint cliques.  The maximum is attained by
disjoint complete bipartite graphs built greedily: the smallest remaining
degree class is paired with the largest one until a class runs out.  A single
remaining class d of positive degree becomes copies of K_{d,d}, and leftover
degree-0 mass becomes isolated vertices.

Mass bookkeeping is exact (Fractions); only the final logarithms round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bounds import Status, Verdict
from .graph_core import Graph, clique, complete_bipartite, disjoint_union
from .intervals import DEFAULT_PREC, log_rational, to_fraction


class ScaleError(ValueError):
    """The requested vertex count does not give integral component counts."""

    def __init__(self, scale: int, multiplier: int):
        super().__init__(
            f"scale {scale} gives non-integral component counts; "
            f"the scale must be a multiple of {multiplier}")
        self.scale = scale
        self.multiplier = multiplier


@dataclass(frozen=True)
class DegreeDist:
    """Finitely supported map degree -> nonnegative rational mass."""

    mass: tuple  # sorted ((degree, Fraction), ...) with nonzero masses

    def __init__(self, mass):
        items = mass.items() if isinstance(mass, dict) else mass
        clean: dict[int, Fraction] = {}
        for d, m in items:
            d, m = int(d), to_fraction(m)
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if m < 0:
                raise ValueError(f"negative mass {m} at degree {d}")
            if m:
                clean[d] = clean.get(d, Fraction(0)) + m
        object.__setattr__(self, "mass", tuple(sorted(clean.items())))

    @classmethod
    def point(cls, d: int) -> DegreeDist:
        return cls({d: 1})

    @classmethod
    def parse(cls, text: str) -> DegreeDist:
        """Parse ``"1:2/3,2:1/3"``."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            d, sep, m = chunk.partition(":")
            if not sep:
                raise ValueError(f"expected 'degree:mass', got {chunk!r}")
            try:
                pairs.append((int(d), Fraction(m.strip())))
            except ValueError:
                raise ValueError(f"bad degree:mass pair {chunk!r}") from None
        return cls(pairs)

    @classmethod
    def of_graph(cls, g: Graph) -> DegreeDist:
        if g.n == 0:
            raise ValueError("empty graph has no degree distribution")
        counts: dict[int, int] = {}
        for d in g.degrees():
            counts[d] = counts.get(d, 0) + 1
        return cls({d: Fraction(c, g.n) for d, c in counts.items()})

    def __str__(self) -> str:
        return ",".join(f"{d}:{m}" for d, m in self.mass)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.mass)

    def total(self) -> Fraction:
        return sum((m for _, m in self.mass), Fraction(0))

    def require_normalized(self) -> None:
        if self.total() != 1:
            raise ValueError(f"masses sum to {self.total()}, not 1")


class Piece(NamedTuple):
    """``copies`` (per vertex of the host graph) of ``kind`` with parameters ``a, b``.

    kind is "K" for K_{a,b}, "clique" for K_a, "iso" for an isolated vertex.
    """

    kind: str
    a: int
    b: int
    copies: Fraction


def max_plan(rho: DegreeDist) -> list[Piece]:
    """Greedy pairing that realizes f_max, as per-vertex component counts.

    ``complete_bipartite(a, b)`` has ``a`` vertices of degree ``b`` and ``b``
    of degree ``a``; each piece records ``(a, b) = (delta, Delta)``.
    """
    mass = {d: m for d, m in rho.mass if d > 0}
    plan: list[Piece] = []
    while mass:
        support = len(mass)
        lo, hi = min(mass), max(mass)
        if lo == hi:
            plan.append(Piece("K", lo, lo, mass.pop(lo) / (2 * lo)))
        elif lo * mass[lo] <= hi * mass[hi]:
            copies = mass[lo] / hi
            mass[hi] -= Fraction(lo, hi) * mass[lo]
            del mass[lo]
            plan.append(Piece("K", lo, hi, copies))
        else:
            copies = mass[hi] / lo
            mass[lo] -= Fraction(hi, lo) * mass[hi]
            del mass[hi]
            plan.append(Piece("K", lo, hi, copies))
        for d in [d for d, m in mass.items() if m == 0]:
            del mass[d]
        assert all(m > 0 for m in mass.values()), "negative mass in f_max recursion"
        assert len(mass) < support, "f_max recursion did not shrink the support"
    rho0 = rho.as_dict().get(0, Fraction(0))
    if rho0:
        plan.append(Piece("iso", 1, 0, rho0))
    return plan


def min_plan(rho: DegreeDist) -> list[Piece]:
    return [Piece("clique", d + 1, 0, m / (d + 1)) for d, m in rho.mass]


def _kab(a: int, b: int, lam: Fraction) -> Fraction:
    return (1 + lam) ** a + (1 + lam) ** b - 1


def f_min(rho: DegreeDist, lam, prec: int = DEFAULT_PREC):
    """Enclosure of log prod_i ((i+1) lam + 1)^(rho_i/(i+1))."""
    rho.require_normalized()
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    total = log_rational(1, prec)
    for piece in min_plan(rho):
        total = total + log_rational(piece.a * lam + 1, prec) * piece.copies
    return total


def f_max(rho: DegreeDist, lam, prec: int = DEFAULT_PREC):
    """Enclosure of log f_max(rho; lam)."""
    rho.require_normalized()
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    total = log_rational(1, prec)
    for piece in max_plan(rho):
        base = 1 + lam if piece.kind == "iso" else _kab(piece.a, piece.b, lam)
        total = total + log_rational(base, prec) * piece.copies
    return total


def _min_multiplier(plan: list[Piece]) -> int:
    return math.lcm(*(p.copies.denominator for p in plan)) if plan else 1


def _instantiate(plan: list[Piece], scale: int) -> Graph:
    if scale < 1:
        raise ValueError("scale must be positive")
    mult = _min_multiplier(plan)
    if scale % mult:
        raise ScaleError(scale, mult)
    parts = []
    for piece in plan:
        k = int(piece.copies * scale)
        if piece.kind == "K":
            unit = complete_bipartite(piece.a, piece.b)
        elif piece.kind == "clique":
            unit = clique(piece.a)
        else:
            unit = Graph(1)
        parts.extend([unit] * k)
    return disjoint_union(*parts)


def min_scale_max(rho: DegreeDist) -> int:
    """Smallest vertex count at which the f_max realization exists."""
    return _min_multiplier(max_plan(rho))


def min_scale_min(rho: DegreeDist) -> int:
    return _min_multiplier(min_plan(rho))


def realize_extremal_max(rho: DegreeDist, scale: int) -> Graph:
    """Disjoint union of complete bipartite graphs on ``scale`` vertices with
    degree distribution ``rho``, following the greedy pairing."""
    rho.require_normalized()
    return _instantiate(max_plan(rho), scale)


def realize_extremal_min(rho: DegreeDist, scale: int) -> Graph:
    """Disjoint union of cliques on ``scale`` vertices with degree distribution ``rho``."""
    rho.require_normalized()
    return _instantiate(min_plan(rho), scale)


def swap_check(a: int, b: int, c: int, d: int, lam, prec: int = DEFAULT_PREC) -> Verdict:
    """P_{K_{a,c}}^{bd} P_{K_{b,d}}^{ac} <= P_{K_{a,d}}^{bc} P_{K_{b,c}}^{ad} for a < b, c < d.

    Both sides are integer powers of exact rationals, so the comparison is
    decided exactly; ``margin`` encloses log(RHS/LHS).
    """
    if not (0 < a < b and 0 < c < d):
        raise ValueError("swap_check needs 0 < a < b and 0 < c < d")
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    lhs = _kab(a, c, lam) ** (b * d) * _kab(b, d, lam) ** (a * c)
    rhs = _kab(a, d, lam) ** (b * c) * _kab(b, c, lam) ** (a * d)
    margin = log_rational(rhs, prec) - log_rational(lhs, prec)
    witness = {"a": a, "b": b, "c": c, "d": d, "lambda": str(lam)}
    if lhs < rhs:
        return Verdict(Status.HOLDS, margin, witness, True, prec)
    if lhs == rhs:
        return Verdict(Status.EQUALITY, margin, witness, False, prec)
    return Verdict(Status.VIOLATED, margin, witness, False, prec)
