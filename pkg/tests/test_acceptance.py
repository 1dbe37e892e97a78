"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

import sys
import time
from fractions import Fraction

import pytest

from indset.alpha_bounds import caro_wei_lower, edge_min_upper
from indset.bounds import (
    Status,
    aggregate,
    check_double_cover,
    check_induction_lower,
    check_induction_upper,
    lower_bound_log,
    sandwich,
    upper_bound_log,
)
from indset.corpus import connected_bipartite_graphs, connected_graphs, full_corpus, random_corpus
from indset.degree_extremal import (
    DegreeDist,
    f_max,
    f_min,
    min_scale_max,
    min_scale_min,
    realize_extremal_max,
    realize_extremal_min,
)
from indset.graph_core import (
    Bigraph,
    clique,
    complete_bipartite,
    cycle,
    is_union_cliques,
    is_union_complete_bipartite,
    path,
    random_graph,
)
from indset.intervals import Interval, log_rational
from indset.lemma_lab import (
    holder_product_sides,
    lemma_a1_endpoint,
    lemma_a3_sides,
    run_suite,
)
from indset.polycount import alpha_exact, brute_force_isp, count, isp

LAMS = [Fraction(1, 2), Fraction(1), Fraction(2)]


def _line(n: int, ok: bool, detail: str) -> str:
    return f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}"


def criterion_1():
    """isp agrees with subset enumeration on every connected graph n <= 7 and
    300 seeded random graphs n <= 14, in under 60 s."""
    start = time.perf_counter()
    graphs = connected_graphs() + random_corpus(300, max_n=14)
    bad = [g for g in graphs if isp(g) != brute_force_isp(g)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    return ok, f"{len(graphs)} graphs, {len(bad)} mismatches, {elapsed:.1f} s (limit 60 s)"


def criterion_2():
    """Point values for P_4, K_{d,d} and cliques."""
    checks = []
    checks.append(("i(P4)=8", count(path(4)) == 8))
    up = upper_bound_log(path(4), 1)
    checks.append(("upper(P4) encloses 5*7^(1/4)", up.overlaps(log_rational(5) + log_rational(7) / 4)))
    # vertex version prod_v (2^(d+1) - 1)^(1/(2d)) = sqrt(63), strictly below i(P4) = 8
    vertex = sum((log_rational(2 ** (d + 1) - 1) / (2 * d) for d in path(4).degrees()[1:]),
                 log_rational(2 ** 2 - 1) / 2)
    checks.append(("vertex version encloses sqrt(63)", vertex.overlaps(log_rational(63) / 2)))
    checks.append(("sqrt(63) < 8", vertex.certainly_lt(log_rational(8))))
    checks.append(("i(K_dd)=2^(d+1)-1, d<=8",
                   all(count(complete_bipartite(d, d)) == 2 ** (d + 1) - 1 for d in range(1, 9))))
    checks.append(("i(K_(d+1))=d+2 and lower bound tight, d<=8",
                   all(count(clique(d + 1)) == d + 2
                       and lower_bound_log(clique(d + 1), 1).overlaps(log_rational(d + 2))
                       for d in range(0, 9))))
    failed = [name for name, ok in checks if not ok]
    return not failed, f"{len(checks)} point checks, failed: {failed or 'none'}"


def criterion_3():
    """Sandwich on the full corpus at three fugacities."""
    corpus = full_corpus()
    violations = indeterminate = flag_errors = escalated = 0
    for g in corpus:
        up_eq, low_eq = is_union_complete_bipartite(g), is_union_cliques(g)
        for lam in LAMS:
            rep = sandwich(g, lam, prec=256, max_prec=256)
            violations += rep.status is Status.VIOLATED
            indeterminate += rep.status is Status.INDETERMINATE
            escalated += rep.precision_bits != 256
            flag_errors += (rep.upper_status is Status.EQUALITY) != up_eq
            flag_errors += (rep.lower_status is Status.EQUALITY) != low_eq
    ok = violations == indeterminate == flag_errors == escalated == 0
    return ok, (f"{len(corpus)} graphs x {len(LAMS)} lambdas: {violations} violated, "
                f"{indeterminate} indeterminate, {flag_errors} equality-flag mismatches")


def _oriented(g, w):
    side = g.bipartition()
    if side[w] == 1:
        side = [1 - s for s in side]
    return Bigraph.from_graph(g, side), sum(1 for u in range(w) if side[u] == 0)


def criterion_4():
    """Both induction steps on every admissible (G, w)."""
    general = connected_graphs()
    bipartite = connected_bipartite_graphs(8)
    lower_graphs = general + tuple(g for g in bipartite if g.n == 8)
    n_checks = bad = eq_mismatch = 0
    for g in lower_graphs:
        delta = g.max_degree()
        clique_like = is_union_cliques(g)
        for w in range(g.n):
            if g.degree(w) != delta:
                continue
            for lam in LAMS:
                v = check_induction_lower(g, w, lam)
                n_checks += 1
                bad += not v.ok
                eq_mismatch += (v.status is Status.EQUALITY) != clique_like
    for g in bipartite:
        delta = g.max_degree()
        if delta < 2:
            continue
        complete = is_union_complete_bipartite(g)
        for w in range(g.n):
            if g.degree(w) != delta:
                continue
            b, wa = _oriented(g, w)
            for lam in LAMS:
                for mu in LAMS:
                    v = check_induction_upper(b, wa, lam, mu)
                    n_checks += 1
                    bad += not v.ok
                    eq_mismatch += (v.status is Status.EQUALITY) != complete
    ok = bad == eq_mismatch == 0
    return ok, f"{n_checks} induction checks: {bad} not holding, {eq_mismatch} equality mismatches"


def criterion_5():
    """count(G)^2 <= count(G x K_2), equality iff bipartite, degree-pair doubling."""
    corpus = full_corpus()
    bad = 0
    for g in corpus:
        v = check_double_cover(g)
        bad += not v.ok or not v.witness["j_identity"]
        bad += (v.status is Status.EQUALITY) != g.is_bipartite()
    return bad == 0, f"{len(corpus)} graphs, {bad} failures"


EXTREMAL_DISTS = [
    "1:1", "2:1", "3:1", "4:1", "0:1", "1:2/3,2:1/3", "1:1/2,2:1/2", "1:1/2,3:1/2",
    "1:3/4,3:1/4", "2:1/2,3:1/2", "1:1/3,2:1/3,3:1/3", "0:1/4,1:3/4", "0:1/2,2:1/2",
    "1:1/5,4:4/5", "2:2/3,4:1/3", "1:1/6,2:1/2,3:1/3", "1:1/4,2:1/4,4:1/2",
    "3:3/5,2:2/5", "1:4/5,4:1/5", "0:1/3,1:1/3,2:1/3", "1:1/2,2:1/4,3:1/4",
    "2:1/4,3:3/4", "1:1/10,5:9/10",
]


def criterion_6():
    """Realized extremal graphs reproduce f_max / f_min; f_max at point masses."""
    mismatches = 0
    for text in EXTREMAL_DISTS:
        rho = DegreeDist.parse(text)
        pairs = [(realize_extremal_max(rho, min_scale_max(rho)), f_max),
                 (realize_extremal_min(rho, min_scale_min(rho)), f_min)]
        for g, f in pairs:
            for lam in LAMS:
                per_vertex = log_rational(isp(g)(lam), 256) / g.n
                mismatches += not per_vertex.overlaps(f(rho, lam, 256))
    point = all(f_max(DegreeDist.point(d), 1).overlaps(log_rational(2 ** (d + 1) - 1) / (2 * d))
                for d in range(1, 9))
    ok = mismatches == 0 and point
    return ok, (f"{len(EXTREMAL_DISTS)} distributions x max/min x {len(LAMS)} lambdas: "
                f"{mismatches} mismatches; f_max(e_d, 1) values {'ok' if point else 'wrong'}")


def criterion_7():
    """caro_wei_lower <= alpha <= edge_min_upper on the corpus, tight cases."""
    corpus = full_corpus()
    bad = sum(not caro_wei_lower(g) <= alpha_exact(g) <= edge_min_upper(g) for g in corpus)
    tight = (all(caro_wei_lower(clique(n)) == alpha_exact(clique(n)) for n in range(1, 9))
             and edge_min_upper(cycle(4)) == alpha_exact(cycle(4)) == 2)
    return bad == 0 and tight, f"{len(corpus)} graphs, {bad} failures, tight cases {'ok' if tight else 'wrong'}"


def criterion_8():
    """Every lemma holds on its default grid for every parameter set, at <= 1024 bits."""
    runs = run_suite("all", max_prec=1024)
    verdicts = [v for vs in runs.values() for v in vs]
    violated = sum(v.status is Status.VIOLATED for v in verdicts)
    indeterminate = sum(v.status is Status.INDETERMINATE for v in verdicts)
    points = sum(v.checked for v in verdicts)
    eq_points = [
        lemma_a3_sides(1, 1, 1, 1, 3),
        lemma_a3_sides(1, 1, 2, 2, 2),
        holder_product_sides((1, 2), (2, 4), (Fraction(1, 3), Fraction(2, 3))),
    ]
    overlap = all(l.overlaps(r) for l, r in eq_points)
    overlap &= all(lemma_a1_endpoint(d, lam).overlaps(Interval.exact(0))
                   for d in range(1, 7) for lam in LAMS)
    ok = violated == indeterminate == 0 and overlap
    per = ", ".join(f"{k}: {aggregate(v).status.value}" for k, v in runs.items())
    return ok, (f"{len(verdicts)} parameter sets, {points} grid comparisons, {violated} violated, "
                f"{indeterminate} indeterminate; {per}; equality points "
                f"{'overlap' if overlap else 'SEPARATED'}")


def criterion_9():
    """Exact count of G(50, 3/49) in under 30 s."""
    worst = 0.0
    for seed in range(5):
        g = random_graph(50, Fraction(3, 49), seed)
        start = time.perf_counter()
        count(g)
        worst = max(worst, time.perf_counter() - start)
    return worst < 30, f"5 random graphs n=50 avg degree 3, slowest {worst:.2f} s (limit 30 s)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, check in enumerate(CRITERIA, start=1):
        ok, detail = check()
        print(_line(i, ok, detail), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
