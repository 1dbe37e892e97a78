"""Exact independent-set polynomials.

The engine works on induced subgraphs encoded as vertex bitmasks of a fixed
host graph.  Each call splits the current mask into connected components and
expands a connected piece by deleting a maximum-degree vertex ``w``::

    P(G) = P(G - w) + lam * P(G - w - N(w))

Connected pieces are memoized per host graph, keyed by their mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import Bigraph, Graph

DEFAULT_BUDGET = 10**8
BRUTE_FORCE_LIMIT = 20


class BudgetExceeded(RuntimeError):
    """The recursion visited more nodes than the configured budget."""


# polynomial types -------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Univariate polynomial with nonnegative integer coefficients;
    ``coeffs[k]`` multiplies ``lam**k``."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c or (0,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(_padd(self.coeffs, other.coeffs))

    def __mul__(self, other: IntPoly) -> IntPoly:
        return IntPoly(_pmul(self.coeffs, other.coeffs))

    def shift(self, k: int = 1) -> IntPoly:
        """Multiply by lam**k."""
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, lam) -> Fraction:
        return evaluate(self, lam)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*lam" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class BivarPoly:
    """Sparse bivariate polynomial; ``coeffs[(j, k)]`` multiplies lam^j mu^k."""

    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: int(v) for k, v in self.coeffs.items() if v})

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.coeffs.get(key, 0)

    def __add__(self, other: BivarPoly) -> BivarPoly:
        return BivarPoly(_badd(self.coeffs, other.coeffs))

    def __mul__(self, other: BivarPoly) -> BivarPoly:
        return BivarPoly(_bmul(self.coeffs, other.coeffs))

    def evaluate(self, lam, mu) -> Fraction:
        lam, mu = Fraction(lam), Fraction(mu)
        return sum((c * lam**j * mu**k for (j, k), c in self.coeffs.items()), Fraction(0))

    def diagonal(self) -> IntPoly:
        """Substitute mu := lam."""
        out = [0] * (max((j + k for j, k in self.coeffs), default=0) + 1)
        for (j, k), c in self.coeffs.items():
            out[j + k] += c
        return IntPoly(tuple(out))

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(j, k, c) for (j, k), c in sorted(self.coeffs.items())]


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _badd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _bmul(a, b):
    out: dict = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + x * y
    return out


def evaluate(p: IntPoly, lam) -> Fraction:
    """Exact value at a rational point (Horner)."""
    lam = Fraction(lam)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * lam + c
    return acc


# bitmask helpers --------------------------------------------------------

def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _split(mask: int, adj) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, in order of
    their lowest vertex."""
    comps = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def _pivot(mask: int, adj) -> int:
    """Maximum-degree vertex of the induced subgraph; ties to the smallest id."""
    best, best_deg = -1, -1
    for v in _bits(mask):
        d = (adj[v] & mask).bit_count()
        if d > best_deg:
            best, best_deg = v, d
    return best


class _Engine:
    """Deletion recursion over one host graph, generic in the coefficient ring."""

    def __init__(self, adj, budget: int, one, vertex_poly, combine_add, combine_mul, times_weight):
        self.adj = adj
        self.budget = budget
        self.nodes = 0
        self.memo: dict[int, object] = {}
        self.one = one
        self.vertex_poly = vertex_poly
        self.add = combine_add
        self.mul = combine_mul
        self.times_weight = times_weight

    def poly(self, mask: int):
        result = self.one
        for comp in _split(mask, self.adj):
            result = self.mul(result, self.connected(comp))
        return result

    def connected(self, mask: int):
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        if mask & (mask - 1) == 0:
            res = self.vertex_poly(mask.bit_length() - 1)
        else:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"node budget {self.budget} exceeded")
            w = _pivot(mask, self.adj)
            without = self.poly(mask & ~(1 << w))
            with_w = self.poly(mask & ~(1 << w) & ~self.adj[w])
            res = self.add(without, self.times_weight(w, with_w))
        self.memo[mask] = res
        return res


def _uni_engine(adj, budget: int) -> _Engine:
    return _Engine(
        adj, budget,
        one=[1],
        vertex_poly=lambda v: [1, 1],
        combine_add=_padd,
        combine_mul=_pmul,
        times_weight=lambda w, p: [0] + list(p),
    )


def isp(g: Graph, budget: int = DEFAULT_BUDGET) -> IntPoly:
    """Independent-set polynomial of ``g``."""
    eng = _uni_engine(g.masks, budget)
    return IntPoly(tuple(eng.poly((1 << g.n) - 1)))


def isp_with_stats(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[IntPoly, int]:
    """Like :func:`isp` but also returns the number of branching nodes."""
    eng = _uni_engine(g.masks, budget)
    p = IntPoly(tuple(eng.poly((1 << g.n) - 1)))
    return p, eng.nodes


def isp_bivariate(b: Bigraph, budget: int = DEFAULT_BUDGET) -> BivarPoly:
    """Two-variable polynomial: lam marks A-vertices, mu marks B-vertices."""
    g = b.to_graph()
    a = b.a_size

    def vertex(v):
        return {(0, 0): 1, (1, 0) if v < a else (0, 1): 1}

    def times_weight(w, p):
        dj, dk = (1, 0) if w < a else (0, 1)
        return {(j + dj, k + dk): c for (j, k), c in p.items()}

    eng = _Engine(g.masks, budget, {(0, 0): 1}, vertex, _badd, _bmul, times_weight)
    return BivarPoly(eng.poly((1 << g.n) - 1))


def count(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Number of independent sets, i(G)."""
    return sum(isp(g, budget).coeffs)


# oracles ----------------------------------------------------------------

def brute_force_isp(g: Graph) -> IntPoly:
    """Independent-set polynomial by enumerating all 2^n vertex subsets."""
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got {n}")
    adj = g.masks
    # indep[S] for S in increasing order: S is independent iff S minus its
    # lowest vertex is independent and that vertex has no neighbour in S.
    indep = bytearray(1 << n)
    indep[0] = 1
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        if indep[rest] and not adj[low.bit_length() - 1] & rest:
            indep[s] = 1
            coeffs[s.bit_count()] += 1
    return IntPoly(tuple(coeffs))


def alpha_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Independence number by branch and bound.

    Vertices of degree <= 1 are taken greedily (some maximum independent set
    contains them); otherwise branch on a maximum-degree vertex, pruning when
    the remaining vertex count cannot beat the incumbent.
    """
    adj = g.masks
    nodes = 0
    memo: dict[int, int] = {}

    def solve(mask: int) -> int:
        total = 0
        for comp in _split(mask, adj):
            total += solve_connected(comp)
        return total

    def solve_connected(mask: int) -> int:
        nonlocal nodes
        if mask & (mask - 1) == 0:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"node budget {budget} exceeded")
        for v in _bits(mask):
            if (adj[v] & mask).bit_count() <= 1:
                res = 1 + solve(mask & ~(1 << v) & ~adj[v])
                break
        else:
            w = _pivot(mask, adj)
            take = 1 + solve(mask & ~(1 << w) & ~adj[w])
            rest = mask & ~(1 << w)
            res = take
            if rest.bit_count() > take:
                res = max(take, solve(rest))
        memo[mask] = res
        return res

    return solve((1 << g.n) - 1)


