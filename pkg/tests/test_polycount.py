from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indset.corpus import random_corpus
from indset.graph_core import (
    Bigraph,
    Graph,
    clique,
    complete_bigraph,
    complete_bipartite,
    cycle,
    disjoint_union,
    double_cover,
    path,
    random_graph,
)
from indset.polycount import (
    BudgetExceeded,
    IntPoly,
    alpha_exact,
    brute_force_isp,
    count,
    evaluate,
    isp,
    isp_bivariate,
    isp_with_stats,
)
from strategies import graphs

LAM = IntPoly((0, 1))


def test_small_polynomials():
    assert isp(Graph(1)) == IntPoly((1, 1))
    for d in range(0, 8):
        assert isp(clique(d + 1)) == IntPoly((1, d + 1))
    p4 = isp(path(4))
    assert p4 == IntPoly((1, 4, 3))
    assert str(p4) == "1 + 4*lam + 3*lam^2"
    assert count(path(4)) == 8


def test_counts():
    for d in range(1, 9):
        assert count(complete_bipartite(d, d)) == 2 ** (d + 1) - 1
    assert count(complete_bipartite(2, 2)) == 7
    assert count(complete_bipartite(1, 2)) == 5


def test_evaluate():
    assert evaluate(IntPoly((1, 1)), 1) == 2
    assert evaluate(IntPoly((1, 4, 3)), 1) == 8
    assert evaluate(IntPoly((1, 3)), Fraction(1, 2)) == Fraction(5, 2)


def test_brute_force():
    c4 = brute_force_isp(cycle(4))
    assert c4 == IntPoly((1, 4, 2))
    assert c4(1) == 7 == count(complete_bipartite(2, 2))
    with pytest.raises(ValueError):
        brute_force_isp(Graph(21))


def test_bivariate_examples():
    assert isp_bivariate(Bigraph.build(1, 0, [])).evaluate(2, 3) == 3
    k11 = isp_bivariate(complete_bigraph(1, 1))
    assert k11.sorted_terms() == [(0, 0, 1), (0, 1, 1), (1, 0, 1)]
    for a in range(1, 5):
        for b in range(1, 5):
            bp = isp_bivariate(complete_bigraph(a, b))
            for lam, mu in [(1, 1), (Fraction(1, 2), 3), (2, Fraction(1, 3))]:
                assert bp.evaluate(lam, mu) == (1 + lam) ** a + (1 + mu) ** b - 1


def test_alpha_examples():
    for n in range(1, 8):
        assert alpha_exact(clique(n)) == 1
    assert alpha_exact(cycle(4)) == 2
    assert alpha_exact(path(4)) == 2
    assert alpha_exact(Graph(5)) == 5


def test_budget_is_loud():
    g = random_graph(40, Fraction(1, 8), 5)
    with pytest.raises(BudgetExceeded):
        isp(g, budget=5)
    with pytest.raises(BudgetExceeded):
        alpha_exact(g, budget=2)


def test_oracle_on_random_corpus():
    for g in random_corpus(220, max_n=12, seed=77):
        assert isp(g) == brute_force_isp(g), g


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=11))
def test_oracle_property(g):
    assert isp(g) == brute_force_isp(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_multiplicative(g, h):
    assert isp(disjoint_union(g, h)) == isp(g) * isp(h)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_deletion_identity_every_vertex(g):
    whole = isp(g)
    for w in range(g.n):
        rest = isp(g.delete([w])) + LAM * isp(g.delete([w, *g.neighbors(w)]))
        assert whole == rest


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_bivariate_diagonal(g):
    side = g.bipartition()
    if side is None:
        return
    b = Bigraph.from_graph(g, side)
    assert isp_bivariate(b).diagonal() == isp(b.to_graph())


def test_bivariate_diagonal_on_covers():
    for g in random_corpus(40, max_n=8, seed=3):
        b = double_cover(g)
        assert isp_bivariate(b).diagonal() == isp(b.to_graph())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_degree_is_alpha(g):
    assert isp(g).degree == alpha_exact(g)


def test_stats_and_pivot_work_on_sparse_graph():
    g = random_graph(50, Fraction(3, 49), 1)
    poly, nodes = isp_with_stats(g)
    assert poly(1) == count(g) and nodes > 0
