"""Deterministic test corpora: small connected graphs, connected bipartite
graphs, and seeded random graphs."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .graph_core import Graph, random_graph

ATLAS_MAX_N = 7


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(index), [(index[u], index[v]) for u, v in h.edges])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@lru_cache(maxsize=None)
def connected_graphs(max_n: int = ATLAS_MAX_N, min_n: int = 1) -> tuple[Graph, ...]:
    """All connected graphs with min_n <= n <= max_n up to isomorphism (n <= 7)."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"the graph atlas stops at {ATLAS_MAX_N} vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(h):
            out.append(from_nx(h))
    return tuple(out)


def _dedupe(graphs: list[Graph]) -> list[Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for g in graphs:
        h = to_nx(g)
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        seen = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, k) for k in seen):
            continue
        seen.append(h)
        out.append(g)
    return out


@lru_cache(maxsize=None)
def connected_bipartite_graphs(max_n: int = 8) -> tuple[Graph, ...]:
    """All connected bipartite graphs on 1..max_n vertices up to isomorphism.

    Every connected graph has a vertex whose removal leaves it connected, so
    level n+1 is reached by joining a new vertex to a nonempty subset of one
    colour class of each level-n graph.
    """
    levels = [[Graph(1)]]
    for _ in range(1, max_n):
        candidates = []
        for g in levels[-1]:
            side = g.bipartition()
            classes = [[v for v in range(g.n) if side[v] == c] for c in (0, 1)]
            for cls in classes:
                for k in range(1, len(cls) + 1):
                    for nbrs in combinations(cls, k):
                        candidates.append(Graph(g.n + 1, list(g.edges()) + [(v, g.n) for v in nbrs]))
        levels.append(_dedupe(candidates))
    return tuple(g for level in levels for g in level)


@lru_cache(maxsize=None)
def random_corpus(count: int = 300, max_n: int = 14, seed: int = 2024) -> tuple[Graph, ...]:
    """``count`` graphs G(n, p) with n cycling over 2..max_n and p over a few
    densities; graph k uses seed ``seed + k``."""
    densities = [Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]
    out = []
    for k in range(count):
        n = 2 + k % (max_n - 1)
        p = densities[(k // (max_n - 1)) % len(densities)]
        out.append(random_graph(n, p, seed + k))
    return tuple(out)


def full_corpus() -> tuple[Graph, ...]:
    """Connected graphs n <= 7, connected bipartite graphs n = 8, random graphs."""
    eight = tuple(g for g in connected_bipartite_graphs(8) if g.n == 8)
    return connected_graphs() + eight + random_corpus()
