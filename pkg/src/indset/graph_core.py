"""Graphs, bigraphs, extremal-family constructors and structural predicates.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` keeps sorted neighbor
lists plus one Python-int bitset per vertex; the counting engine works almost
entirely on the bitsets.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np

RNG_NAME = "numpy.random.PCG64"


class GraphFormatError(ValueError):
    """Malformed graph or bigraph text; ``line`` is 1-based (0 if unknown)."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class DegreePair(NamedTuple):
    lo: int
    hi: int

    @classmethod
    def of(cls, a: int, b: int) -> DegreePair:
        if min(a, b) < 1:
            raise ValueError("degree pair entries must be positive")
        return cls(min(a, b), max(a, b))


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adjacency", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            count += 1
        self.n = n
        self.adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        self.masks = tuple(sum(1 << w for w in s) for s in nbrs)
        self._edges = count

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        edges = []
        for u, m in enumerate(masks):
            m >>= u + 1
            v = u + 1
            while m:
                if m & 1:
                    edges.append((u, v))
                m >>= 1
                v += 1
        return cls(len(masks), edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def num_edges(self) -> int:
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self):
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v > u:
                    yield (u, v)

    def iso(self) -> int:
        """Number of isolated vertices."""
        return sum(1 for a in self.adjacency if not a)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled by ascending original id."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(keep), edges)

    def delete(self, vertices: Iterable[int]) -> Graph:
        gone = set(vertices)
        return self.induced(v for v in range(self.n) if v not in gone)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def bipartition(self) -> list[int] | None:
        """A proper 2-colouring (BFS from the smallest id of each component),
        or None if the graph has an odd cycle."""
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] != -1:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if colour[v] == -1:
                        colour[v] = 1 - colour[u]
                        queue.append(v)
                    elif colour[v] == colour[u]:
                        return None
        return colour

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Bigraph:
    """Bipartite graph with a fixed bipartition.

    A-vertices are ``0..a_size-1`` and B-vertices ``0..b_size-1``; each edge is
    an ordered pair ``(u in A, v in B)``.
    """

    a_size: int
    b_size: int
    edges: frozenset

    def __post_init__(self):
        if self.a_size < 0 or self.b_size < 0:
            raise ValueError("part sizes must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < self.a_size and 0 <= v < self.b_size):
                raise ValueError(f"edge ({u}, {v}) does not go from A to B")

    @classmethod
    def build(cls, a_size: int, b_size: int, edges: Iterable[tuple[int, int]]) -> Bigraph:
        edges = list(edges)
        es = frozenset(edges)
        if len(es) != len(edges):
            raise ValueError("duplicate edge")
        return cls(a_size, b_size, es)

    @classmethod
    def from_graph(cls, g: Graph, side: list[int] | None = None) -> Bigraph:
        """Bigraph of a bipartite graph; ``side[v]`` is 0 for A and 1 for B.

        Vertices keep their relative order within each part.
        """
        if side is None:
            side = g.bipartition()
            if side is None:
                raise ValueError("graph is not bipartite")
        a_ids = [v for v in range(g.n) if side[v] == 0]
        b_ids = [v for v in range(g.n) if side[v] == 1]
        ai = {v: i for i, v in enumerate(a_ids)}
        bi = {v: i for i, v in enumerate(b_ids)}
        edges = []
        for u, v in g.edges():
            if side[u] == side[v]:
                raise ValueError(f"edge ({u}, {v}) inside one part")
            if side[u] == 1:
                u, v = v, u
            edges.append((ai[u], bi[v]))
        return cls.build(len(a_ids), len(b_ids), edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees_a(self) -> list[int]:
        d = [0] * self.a_size
        for u, _ in self.edges:
            d[u] += 1
        return d

    def degrees_b(self) -> list[int]:
        d = [0] * self.b_size
        for _, v in self.edges:
            d[v] += 1
        return d

    def iso_a(self) -> int:
        return self.degrees_a().count(0)

    def iso_b(self) -> int:
        return self.degrees_b().count(0)

    def to_graph(self) -> Graph:
        """Underlying graph: A-vertex u is ``u``, B-vertex v is ``a_size + v``."""
        return Graph(self.a_size + self.b_size,
                     ((u, self.a_size + v) for u, v in self.sorted_edges()))

    def swap(self) -> Bigraph:
        return Bigraph(self.b_size, self.a_size, frozenset((v, u) for u, v in self.edges))

    def neighbors_a(self, u: int) -> list[int]:
        return sorted(v for x, v in self.edges if x == u)

    def delete(self, a_gone: Iterable[int] = (), b_gone: Iterable[int] = ()) -> Bigraph:
        """Delete vertices from each part, relabeling the rest densely."""
        a_gone, b_gone = set(a_gone), set(b_gone)
        a_keep = {u: i for i, u in enumerate(x for x in range(self.a_size) if x not in a_gone)}
        b_keep = {v: i for i, v in enumerate(x for x in range(self.b_size) if x not in b_gone)}
        edges = frozenset((a_keep[u], b_keep[v]) for u, v in self.edges
                          if u in a_keep and v in b_keep)
        return Bigraph(len(a_keep), len(b_keep), edges)

    def to_text(self) -> str:
        lines = [f"bip {self.a_size} {self.b_size}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"


# parsing ----------------------------------------------------------------

def _content_lines(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _int_token(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise GraphFormatError(lineno, f"expected an integer, got {tok!r}") from None
    if value < 0:
        raise GraphFormatError(lineno, f"negative value {value}")
    return value


def _parse_edges(lines, lim_u, lim_v, symmetric):
    seen = set()
    edges = []
    for lineno, toks in lines:
        if len(toks) != 2:
            raise GraphFormatError(lineno, f"expected '<u> <v>', got {' '.join(toks)!r}")
        u, v = (_int_token(t, lineno) for t in toks)
        if u >= lim_u or v >= lim_v:
            raise GraphFormatError(lineno, f"vertex id out of range in edge {u} {v}")
        if symmetric and u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v)) if symmetric else (u, v)
        if key in seen:
            raise GraphFormatError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    return edges


def parse_graph(text) -> Graph:
    """Parse the ``n <count>`` edge-list format (str or bytes)."""
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise GraphFormatError(0, "empty input: missing 'n <count>' header")
    lineno, toks = header
    if len(toks) != 2 or toks[0] != "n":
        raise GraphFormatError(lineno, "first line must be 'n <count>'")
    n = _int_token(toks[1], lineno)
    return Graph(n, _parse_edges(lines, n, n, symmetric=True))


def parse_bigraph(text) -> Bigraph:
    """Parse the ``bip <a_size> <b_size>`` edge-list format."""
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise GraphFormatError(0, "empty input: missing 'bip <a> <b>' header")
    lineno, toks = header
    if len(toks) != 3 or toks[0] != "bip":
        raise GraphFormatError(lineno, "first line must be 'bip <a_size> <b_size>'")
    a, b = _int_token(toks[1], lineno), _int_token(toks[2], lineno)
    return Bigraph.build(a, b, _parse_edges(lines, a, b, symmetric=False))


def parse_any(text) -> Graph | Bigraph:
    """Dispatch on the header keyword."""
    for _, toks in _content_lines(text):
        if toks[0] == "bip":
            return parse_bigraph(text)
        break
    return parse_graph(text)


# constructors -----------------------------------------------------------

def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices ``0..a-1`` (degree b) joined to ``a..a+b-1`` (degree a)."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def complete_bigraph(a: int, b: int) -> Bigraph:
    if a < 1 or b < 1:
        raise ValueError("complete_bigraph needs a, b >= 1")
    return Bigraph(a, b, frozenset((i, j) for i in range(a) for j in range(b)))


def clique(k: int) -> Graph:
    if k < 1:
        raise ValueError("clique needs k >= 1")
    return Graph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def double_cover(g: Graph) -> Bigraph:
    """G x K_2 with A = V x {0} and B = V x {1}, both indexed by the vertex of G."""
    edges = []
    for u, v in g.edges():
        edges.append((u, v))
        edges.append((v, u))
    return Bigraph(g.n, g.n, frozenset(edges))


def random_graph(n: int, p, seed: int) -> Graph:
    """G(n, p) with an exact rational edge probability.

    Pairs ``u < v`` are visited in lexicographic order; the pair becomes an edge
    when a uniform draw from ``[0, den)`` falls below ``num``, with draws taken
    from PCG64 seeded with ``seed``.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    draws = rng.integers(0, p.denominator, size=len(pairs), dtype=np.int64)
    return Graph(n, (e for e, r in zip(pairs, draws) if r < p.numerator))


# structure --------------------------------------------------------------

class Component(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]


def components(g: Graph) -> list[Component]:
    """Connected components ordered by smallest vertex, each relabeled by
    ascending original id; ``vertices[i]`` is the original id of vertex i."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comp.sort()
        out.append(Component(g.induced(comp), tuple(comp)))
    return out


def is_union_complete_bipartite(g: Graph) -> bool:
    """Every component is K_{x,y} (an isolated vertex counts as one)."""
    for comp, _ in components(g):
        if comp.n == 1:
            continue
        side = comp.bipartition()
        if side is None:
            return False
        x = side.count(0)
        if comp.num_edges != x * (comp.n - x):
            return False
    return True


def is_union_cliques(g: Graph) -> bool:
    return all(c.num_edges == c.n * (c.n - 1) // 2 for c, _ in components(g))


def degree_degree_distribution(g: Graph) -> Counter:
    """Multiset of unordered degree pairs, one per edge."""
    deg = g.degrees()
    return Counter(DegreePair.of(deg[u], deg[v]) for u, v in g.edges())


def bigraph_degree_pairs(b: Bigraph) -> Counter:
    """Multiset of (deg_A(u), deg_B(v)) ordered pairs, one per edge."""
    da, db = b.degrees_a(), b.degrees_b()
    return Counter((da[u], db[v]) for u, v in b.edges)
