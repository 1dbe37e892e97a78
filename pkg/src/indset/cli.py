"""Command-line front end.  Every subcommand prints one JSON report on stdout.

Exit codes: 0 ok (including Holds / HoldsWithEquality), 1 usage or input
error, 2 Violated, 3 Indeterminate or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import alpha_bounds, bounds, degree_extremal, lemma_lab, polycount
from .bounds import Status, Verdict
from .graph_core import Bigraph, Graph, GraphFormatError, parse_any, random_graph
from .intervals import DEFAULT_PREC, Interval, log_rational

EXIT_OK, EXIT_INPUT, EXIT_VIOLATED, EXIT_INDETERMINATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _fmt(value):
    """JSON-ready form: numbers become strings, intervals become dicts."""
    if isinstance(value, Interval):
        lo, hi = value.decimal()
        return {"lo": lo, "hi": hi, "precision_bits": value.precision_bits}
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, Status):
        return value.value
    if isinstance(value, dict):
        return {str(k): _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _verdict(v: Verdict) -> dict:
    out = {"verdict": v.status, "strict": v.strict, "checked": v.checked,
           "precision_bits": v.precision_bits}
    if v.margin is not None:
        out["margin"] = v.margin
    if v.witness:
        out["witness"] = v.witness
    return out


# argument plumbing ------------------------------------------------------

def _common(p: argparse.ArgumentParser, graph: bool = True) -> None:
    if graph:
        p.add_argument("graph", nargs="?", help="edge-list file ('-' for stdin)")
        p.add_argument("--random", metavar="N:P",
                       help="use a seeded random graph G(N, P) instead of a file")
        p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1))
    p.add_argument("--mu", type=_rational)
    p.add_argument("--prec", type=int, default=DEFAULT_PREC)
    p.add_argument("--budget", type=int, default=polycount.DEFAULT_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("count", "poly", "alpha", "doublecover"):
        _common(sub.add_parser(name))
    p = sub.add_parser("bounds")
    _common(p)
    p.add_argument("--mode", choices=["upper", "lower", "both"], default="both")
    _common(sub.add_parser("sandwich"))
    for name in ("extremal", "realize"):
        p = sub.add_parser(name)
        _common(p, graph=False)
        p.add_argument("--dist", required=True, help='e.g. "1:2/3,2:1/3"')
        p.add_argument("--mode", choices=["min", "max"], default="max")
        if name == "realize":
            p.add_argument("--scale", type=int)
    p = sub.add_parser("lemmas")
    _common(p, graph=False)
    p.add_argument("--which", choices=["a1", "a2", "a3", "power", "holder", "all"], default="all")
    p.add_argument("--grid", type=int, help="points on the primary axis of each grid")
    p.add_argument("--max-prec", type=int, default=1024)
    p = sub.add_parser("induction")
    _common(p)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--mode", choices=["upper", "lower"], default="upper")
    p = sub.add_parser("swapcheck")
    _common(p, graph=False)
    p.add_argument("abcd", nargs=4, type=int, metavar="N", help="a b c d with a < b, c < d")
    return parser


def _load(args) -> Graph | Bigraph:
    if args.random:
        n, _, prob = args.random.partition(":")
        try:
            return random_graph(int(n), Fraction(prob), args.seed)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--random expects N:P, got {args.random!r}") from None
    if args.graph is None:
        raise UsageError("a graph file (or --random) is required")
    text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
    return parse_any(text)


def _plain(obj: Graph | Bigraph) -> Graph:
    return obj.to_graph() if isinstance(obj, Bigraph) else obj


def _inputs(args) -> dict:
    skip = {"command"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        out["lambda" if key == "lam" else key] = value
    return out


# commands ---------------------------------------------------------------
# Each returns (result dict, Status or None, precision bits).

def cmd_count(args):
    g = _plain(_load(args))
    poly, nodes = polycount.isp_with_stats(g, args.budget)
    return {"count": poly(1), "n": g.n, "edges": g.num_edges, "nodes": nodes}, None, args.prec


def cmd_poly(args):
    obj = _load(args)
    result = {}
    if isinstance(obj, Bigraph):
        bp = polycount.isp_bivariate(obj, args.budget)
        result["bivariate"] = [list(t) for t in bp.sorted_terms()]
    poly = polycount.isp(_plain(obj), args.budget)
    result.update(coefficients=list(poly.coeffs), polynomial=str(poly), alpha=poly.degree)
    return result, None, args.prec


def cmd_bounds(args):
    obj = _load(args)
    g = _plain(obj)
    result = {}
    if args.mode in ("upper", "both"):
        result["upper_log"] = bounds.upper_bound_log(g, args.lam, args.prec)
        if isinstance(obj, Bigraph) and args.mu is not None:
            result["upper_bivariate_log"] = bounds.upper_bound_bivariate_log(
                obj, args.lam, args.mu, args.prec)
    if args.mode in ("lower", "both"):
        result["lower_log"] = bounds.lower_bound_log(g, args.lam, args.prec)
    return result, None, args.prec


def cmd_sandwich(args):
    g = _plain(_load(args))
    rep = bounds.sandwich(g, args.lam, args.prec, args.budget)
    result = {
        "exact": rep.exact, "exact_log": rep.exact_log,
        "lower_log": rep.lower_log, "upper_log": rep.upper_log,
        "lower_equality": rep.lower_equality, "upper_equality": rep.upper_equality,
        "lower_status": rep.lower_status, "upper_status": rep.upper_status,
        "verdict": rep.status,
    }
    if rep.witness:
        result["witness"] = rep.witness
    return result, rep.status, rep.precision_bits


def _dist(args):
    try:
        rho = degree_extremal.DegreeDist.parse(args.dist)
        rho.require_normalized()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return rho


def _plan(pieces):
    return [{"kind": p.kind, "a": p.a, "b": p.b, "copies_per_vertex": p.copies} for p in pieces]


def cmd_extremal(args):
    rho = _dist(args)
    if args.mode == "max":
        value, plan = degree_extremal.f_max(rho, args.lam, args.prec), degree_extremal.max_plan(rho)
        scale = degree_extremal.min_scale_max(rho)
    else:
        value, plan = degree_extremal.f_min(rho, args.lam, args.prec), degree_extremal.min_plan(rho)
        scale = degree_extremal.min_scale_min(rho)
    return {"log_value": value, "dist": str(rho), "plan": _plan(plan), "min_scale": scale}, None, args.prec


def cmd_realize(args):
    rho = _dist(args)
    if args.mode == "max":
        scale = args.scale or degree_extremal.min_scale_max(rho)
        g = degree_extremal.realize_extremal_max(rho, scale)
        value = degree_extremal.f_max(rho, args.lam, args.prec)
    else:
        scale = args.scale or degree_extremal.min_scale_min(rho)
        g = degree_extremal.realize_extremal_min(rho, scale)
        value = degree_extremal.f_min(rho, args.lam, args.prec)
    exact = polycount.isp(g, args.budget)(args.lam)
    realized = log_rational(exact, args.prec) / g.n
    status = Status.EQUALITY if realized.overlaps(value) else Status.VIOLATED
    result = {"graph": g.to_text(), "n": g.n, "edges": g.num_edges, "scale": scale,
              "log_value": value, "realized_log_per_vertex": realized, "verdict": status}
    if status is Status.VIOLATED:
        result["witness"] = {"exact": exact}
    return result, status, args.prec


def cmd_alpha(args):
    g = _plain(_load(args))
    alpha = polycount.alpha_exact(g, args.budget)
    lo, hi = alpha_bounds.caro_wei_lower(g), alpha_bounds.edge_min_upper(g)
    status = Status.HOLDS if lo <= alpha <= hi else Status.VIOLATED
    if status is Status.HOLDS and (lo == alpha or alpha == hi):
        status = Status.EQUALITY
    return {"alpha": alpha, "caro_wei_lower": lo, "edge_min_upper": hi,
            "lower_tight": lo == alpha, "upper_tight": alpha == hi, "verdict": status}, status, args.prec


def cmd_doublecover(args):
    g = _plain(_load(args))
    v = bounds.check_double_cover(g, args.prec, args.budget)
    return _verdict(v), v.status, v.precision_bits


def cmd_induction(args):
    obj = _load(args)
    if args.mode == "lower":
        v = bounds.check_induction_lower(_plain(obj), args.vertex, args.lam, args.prec)
        return _verdict(v), v.status, v.precision_bits
    mu = args.mu if args.mu is not None else args.lam
    if isinstance(obj, Bigraph):
        b, w = obj, args.vertex
    else:
        side = obj.bipartition()
        if side is None:
            raise UsageError("the upper induction step needs a bipartite graph")
        if not 0 <= args.vertex < obj.n:
            raise UsageError(f"no vertex {args.vertex}")
        if side[args.vertex] == 1:
            side = [1 - s for s in side]
        b = Bigraph.from_graph(obj, side)
        w = sum(1 for u in range(args.vertex) if side[u] == 0)
    v = bounds.check_induction_upper(b, w, args.lam, mu, args.prec)
    return _verdict(v), v.status, v.precision_bits


def cmd_swapcheck(args):
    a, b, c, d = args.abcd
    v = degree_extremal.swap_check(a, b, c, d, args.lam, args.prec)
    return _verdict(v), v.status, v.precision_bits


def cmd_lemmas(args):
    runs = lemma_lab.run_suite(args.which, args.grid, args.prec, args.max_prec)
    result = {}
    for name, verdicts in runs.items():
        agg = bounds.aggregate(verdicts)
        result[name] = {"verdict": agg.status, "strict": agg.strict,
                        "parameter_sets": len(verdicts),
                        "points": sum(v.checked for v in verdicts),
                        "precision_bits": agg.precision_bits}
        if agg.witness:
            result[name]["witness"] = agg.witness
    overall = bounds.aggregate(bounds.aggregate(v) for v in runs.values())
    result["verdict"] = overall.status
    return result, overall.status, overall.precision_bits


COMMANDS = {
    "count": cmd_count, "poly": cmd_poly, "bounds": cmd_bounds, "sandwich": cmd_sandwich,
    "extremal": cmd_extremal, "realize": cmd_realize, "alpha": cmd_alpha,
    "lemmas": cmd_lemmas, "doublecover": cmd_doublecover, "induction": cmd_induction,
    "swapcheck": cmd_swapcheck,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    start = time.perf_counter()
    command, inputs, prec = None, {}, DEFAULT_PREC
    try:
        args = build_parser().parse_args(argv)
        command, inputs, prec = args.command, _inputs(args), args.prec
        result, status, prec = COMMANDS[args.command](args)
        if status is Status.VIOLATED:
            code, label = EXIT_VIOLATED, "error"
        elif status is Status.INDETERMINATE:
            code, label = EXIT_INDETERMINATE, "indeterminate"
        else:
            code, label = EXIT_OK, "ok"
    except polycount.BudgetExceeded as exc:
        result, code, label = {"error": str(exc)}, EXIT_INDETERMINATE, "indeterminate"
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        result, code, label = {"error": str(exc)}, EXIT_INPUT, "error"
    if code != EXIT_OK:
        print(f"indset: {result.get('error') or result.get('verdict')}", file=err)
    report = {
        "command": command, "inputs": _fmt(inputs), "result": _fmt(result),
        "status": label, "precision_bits": prec,
        "runtime_ms": int((time.perf_counter() - start) * 1000),
    }
    json.dump(report, out, sort_keys=True, indent=2)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run())
