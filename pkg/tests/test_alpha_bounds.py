from fractions import Fraction

from indset.alpha_bounds import caro_wei_lower, edge_min_upper
from indset.corpus import connected_graphs, random_corpus
from indset.graph_core import Graph, clique, cycle, path
from indset.intervals import log_rational
from indset.polycount import alpha_exact, count, isp


def test_examples():
    for n in range(1, 9):
        assert caro_wei_lower(clique(n)) == 1 == alpha_exact(clique(n))
    assert caro_wei_lower(path(4)) == Fraction(5, 3)
    assert edge_min_upper(cycle(4)) == 2 == alpha_exact(cycle(4))
    assert edge_min_upper(path(4)) == Fraction(5, 2)
    assert caro_wei_lower(Graph(6)) == 6 == edge_min_upper(Graph(6))


def test_bounds_bracket_alpha():
    for g in connected_graphs(6) + random_corpus(80, max_n=12, seed=5):
        a = alpha_exact(g)
        assert caro_wei_lower(g) <= a <= edge_min_upper(g)
        assert isp(g).degree == a


def _slope(g, lam):
    return log_rational(isp(g)(lam)) / log_rational(lam)


def test_growth_rate_at_huge_lambda():
    """log P(lam) / log lam -> alpha as lam grows."""
    lam = Fraction(10) ** 500
    for g in connected_graphs(6) + random_corpus(40, max_n=12, seed=6):
        s = _slope(g, lam)
        a = alpha_exact(g)
        assert a - Fraction(1, 100) < s.lo and s.hi < a + Fraction(1, 100)


def test_growth_rate_bracket_at_1e6():
    # at lam = 10^6 the slope lies in [alpha, alpha + log i(G) / log lam]
    lam = Fraction(10) ** 6
    for g in connected_graphs(6):
        s = _slope(g, lam)
        a = alpha_exact(g)
        slack = log_rational(count(g)) / log_rational(lam)
        assert a <= s.hi and s.lo <= (slack + a).hi
