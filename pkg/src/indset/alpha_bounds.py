"""Degree-based bounds on the independence number, in exact rationals."""

from __future__ import annotations

from fractions import Fraction

from .graph_core import Graph


def caro_wei_lower(g: Graph) -> Fraction:
    """sum_v 1/(d_v + 1)."""
    return sum((Fraction(1, d + 1) for d in g.degrees()), Fraction(0))


def edge_min_upper(g: Graph) -> Fraction:
    """sum_{uv in E} 1/min(d_u, d_v) + iso(G)."""
    deg = g.degrees()
    total = sum((Fraction(1, min(deg[u], deg[v])) for u, v in g.edges()), Fraction(0))
    return total + g.iso()
