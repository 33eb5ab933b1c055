"""Command-line front end.

Exit codes: 0 success, 1 failed verification claims, 2 usage errors,
3 budget exhaustion under --require-exact.  JSON output is the stable
machine contract; the human format is for eyes only and may change.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import (
    Objective,
    W_closed,
    game_solve,
    game_to_json,
    mu21_closed_form,
    mu_params,
    mu_table,
    mu_table_to_csv,
    mu_table_to_json,
    params_to_json,
    report_to_json,
    verify_suite,
    wY_closed,
    w_closed,
)
from .coloring import coloring_to_json, summarize, to_dot
from .constructions import (
    block_interval_on_Y,
    collapse_sequence,
    staircase_coloring,
    trace_to_json,
)
from .graphs import (
    Graph,
    build_complete_bipartite,
    build_cycle,
    build_path,
    graph_from_json,
)
from .search import (
    BudgetExhausted,
    SearchBudget,
    Status,
    mu1,
    mu2,
    outcome_to_json,
    w_range,
)

BUDGET_ENV_VAR = "EDGESPECTRA_BUDGET_SECONDS"
_DEFAULT_SECONDS = 10.0


def parse_graph_spec(s: str) -> Graph:
    """Build a graph from `kmn:M,N`, `cycle:K`, `path:K`, or `file:PATH`."""
    kind, sep, rest = s.partition(":")
    if not sep:
        raise ValueError(f"graph spec {s!r} lacks a ':' separator")
    if kind == "kmn":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"kmn spec needs M,N; got {rest!r}")
        try:
            m, n = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"kmn spec needs integers: {exc}") from exc
        return build_complete_bipartite(m, n)
    if kind == "cycle":
        return build_cycle(_int_or_raise(rest, "cycle length"))
    if kind == "path":
        return build_path(_int_or_raise(rest, "path length"))
    if kind == "file":
        try:
            with open(rest, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise ValueError(f"cannot read {rest!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValueError(
                f"{rest}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
        return graph_from_json(doc)
    raise ValueError(f"unknown graph kind {kind!r} (use kmn|cycle|path|file)")


def _int_or_raise(raw: str, what: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{what} must be an integer, got {raw!r}") from exc


def _budget_from(args: argparse.Namespace) -> SearchBudget:
    seconds = args.max_seconds
    if seconds is None:
        raw = os.environ.get(BUDGET_ENV_VAR, "").strip()
        if raw:
            try:
                seconds = float(raw)
            except ValueError as exc:
                raise ValueError(f"{BUDGET_ENV_VAR}={raw!r} is not a number") from exc
        else:
            seconds = _DEFAULT_SECONDS
    if seconds <= 0:
        seconds = None  # nonpositive disables the time limit
    nodes = args.max_nodes
    if nodes is not None and nodes <= 0:
        nodes = None
    workers = args.workers
    if workers is None:
        workers = getattr(os, "process_cpu_count", os.cpu_count)() or 1
    return SearchBudget(max_nodes=nodes, max_seconds=seconds, parallel_width=workers)


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _jdump(doc) -> str:
    return json.dumps(doc, indent=2)


def _budget_exit(args: argparse.Namespace, exhausted: bool) -> int:
    if exhausted and args.require_exact:
        print("budget exhausted before an exact answer", file=sys.stderr)
        return 3
    return 0


def _graph_label(g: Graph) -> str:
    return g.name or f"graph<{g.vertex_count}v,{g.edge_count}e>"


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=None,
                   help="node limit per solve (nonpositive = unlimited)")
    p.add_argument("--max-seconds", type=float, default=None,
                   help=f"time limit per solve in seconds; default 10 or "
                        f"${BUDGET_ENV_VAR} (nonpositive = unlimited)")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel subproblem width; default: CPU count")
    p.add_argument("--require-exact", action="store_true",
                   help="exit 3 instead of reporting budget-limited bounds")


def _add_common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", choices=formats, default="human")
    p.add_argument("--output", default=None, help="write to a file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="edgespectra",
        description="Exact spectra extrema, constructions, and closed-form "
                    "verification for proper edge colorings.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="mu1 and mu2 for one color count")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    _add_common(p, ("human", "json"))
    _add_budget_flags(p)

    p = sub.add_parser("mu-table", help="mu1/mu2 for every feasible color count")
    p.add_argument("--graph", required=True)
    _add_common(p, ("human", "json", "csv"))
    _add_budget_flags(p)

    p = sub.add_parser("mu-params", help="the four folded game parameters")
    p.add_argument("--graph", required=True)
    _add_common(p, ("human", "json"))
    _add_budget_flags(p)

    p = sub.add_parser("game", help="solve the Alice/Bob color-count game")
    p.add_argument("--graph", required=True)
    p.add_argument("--objective", choices=("mu21", "mu12"), required=True)
    _add_common(p, ("human", "json", "dot"))
    _add_budget_flags(p)

    p = sub.add_parser("construct", help="emit an explicit coloring")
    p.add_argument("kind", choices=("staircase", "collapse", "block-y"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None,
                   help="collapse steps (default: the full sequence)")
    p.add_argument("--q", type=int, default=None,
                   help="block-y group count (default: ceil(m/n))")
    _add_common(p, ("human", "json", "dot"))

    p = sub.add_parser("wrange", help="least/greatest t interval on a vertex set")
    p.add_argument("--graph", required=True)
    p.add_argument("--part", choices=("X", "Y", "V"), default="V")
    _add_common(p, ("human", "json"))
    _add_budget_flags(p)

    p = sub.add_parser("closed-form", help="evaluate one closed formula")
    p.add_argument("which", choices=("mu21", "w", "W", "wY"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p, ("human", "json"))

    p = sub.add_parser("verify", help="closed forms vs blind search")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    _add_common(p, ("human", "json"))
    _add_budget_flags(p)

    return ap


def _cmd_mu(args) -> int:
    g = parse_graph_spec(args.graph)
    budget = _budget_from(args)
    lo = mu1(g, args.t, budget)
    hi = mu2(g, args.t, budget)
    if args.format == "json":
        _emit(args, _jdump({
            "graph": _graph_label(g),
            "t": args.t,
            "mu1": outcome_to_json(lo),
            "mu2": outcome_to_json(hi),
        }))
    else:
        lines = [f"{_graph_label(g)}  t={args.t}"]
        for name, o in (("mu1", lo), ("mu2", hi)):
            lines.append(
                f"  {name} = {o.value}  [{o.status.value}, {o.nodes_visited} nodes]"
            )
        _emit(args, "\n".join(lines))
    return _budget_exit(args, lo.status is Status.BUDGET or hi.status is Status.BUDGET)


def _cmd_mu_table(args) -> int:
    g = parse_graph_spec(args.graph)
    table = mu_table(g, _budget_from(args))
    if args.format == "json":
        _emit(args, _jdump(mu_table_to_json(table)))
    elif args.format == "csv":
        _emit(args, mu_table_to_csv(table))
    else:
        params = mu_params(table)
        best_t = next(r.t for r in table.rows if r.mu2.value == params.mu21.value)
        head = f"{_graph_label(g):<12} {'mu1':>5} {'mu2':>5}"
        lines = [head, "-" * len(head)]
        for r in table.rows:
            mark = "  <- mu21" if r.t == best_t else ""
            cell1 = str(r.mu1.value) + ("" if r.mu1.status is Status.EXACT else "?")
            cell2 = str(r.mu2.value) + ("" if r.mu2.status is Status.EXACT else "?")
            lines.append(f"t={r.t:<10} {cell1:>5} {cell2:>5}{mark}")
        _emit(args, "\n".join(lines))
    exhausted = any(
        r.mu1.status is Status.BUDGET or r.mu2.status is Status.BUDGET
        for r in table.rows
    )
    return _budget_exit(args, exhausted)


def _cmd_mu_params(args) -> int:
    g = parse_graph_spec(args.graph)
    params = mu_params(mu_table(g, _budget_from(args)))
    if args.format == "json":
        _emit(args, _jdump({"graph": _graph_label(g), **params_to_json(params)}))
    else:
        lines = [f"{_graph_label(g)}"]
        for name in ("mu11", "mu12", "mu21", "mu22"):
            e = getattr(params, name)
            flag = "" if e.exact else "  (not exact: budget-limited rows)"
            lines.append(f"  {name} = {e.value}{flag}")
        _emit(args, "\n".join(lines))
    exhausted = not (params.mu11.exact and params.mu21.exact)
    return _budget_exit(args, exhausted)


def _cmd_game(args) -> int:
    g = parse_graph_spec(args.graph)
    result = game_solve(g, Objective(args.objective), _budget_from(args))
    if args.format == "json":
        _emit(args, _jdump({"graph": _graph_label(g), **game_to_json(result)}))
    elif args.format == "dot":
        if result.bob_witness is None:
            print("no witness coloring available", file=sys.stderr)
            return 3
        _emit(args, to_dot(g, result.bob_witness))
    else:
        who = "min" if result.objective is Objective.MU21 else "max"
        lines = [
            f"{_graph_label(g)}  objective={result.objective.value}",
            f"  alice t = {result.alice_t}  ({who} over the t-range)",
            f"  value   = {result.value}{'' if result.exact else '  (not exact)'}",
        ]
        if result.bob_witness is not None:
            lines.append(f"  bob     = {list(result.bob_witness.colors)}")
        _emit(args, "\n".join(lines))
    return _budget_exit(args, not result.exact)


def _cmd_construct(args) -> int:
    m, n = args.m, args.n
    g = build_complete_bipartite(m, n)
    if args.kind == "staircase":
        c = staircase_coloring(m, n)
        doc = coloring_to_json(c)
    elif args.kind == "block-y":
        q = args.q if args.q is not None else -(-m // n)
        c = block_interval_on_Y(m, n, q)
        doc = coloring_to_json(c)
    else:
        base = staircase_coloring(m, n)
        k = args.k if args.k is not None else n - 1
        trace = collapse_sequence(g, base, k)
        c = trace.stages[-1]
        doc = trace_to_json(trace)
    if args.format == "json":
        _emit(args, _jdump(doc))
    elif args.format == "dot":
        _emit(args, to_dot(g, c))
    else:
        summary = summarize(g, c)
        lines = [
            f"{_graph_label(g)}  {args.kind}  t={c.t}",
            f"  colors = {list(c.colors)}",
            f"  f      = {summary.interval_count} of {g.vertex_count} vertices interval",
        ]
        _emit(args, "\n".join(lines))
    return 0


def _cmd_wrange(args) -> int:
    g = parse_graph_spec(args.graph)
    if args.part == "V":
        r = frozenset(range(g.vertex_count))
    else:
        r = g.part(args.part)
    res = w_range(g, r, _budget_from(args))
    if args.format == "json":
        _emit(args, _jdump({
            "graph": _graph_label(g),
            "part": args.part,
            "w": res.w,
            "W": res.W,
            "exact": res.exact,
            "contiguous": res.contiguous,
            "has_i_property": res.has_i_property,
            "rows": {str(t): outcome_to_json(o) for t, o in sorted(res.outcomes.items())},
        }))
    else:
        lines = [
            f"{_graph_label(g)}  part={args.part}",
            f"  w = {res.w}   W = {res.W}"
            f"   contiguous = {res.contiguous}   i-property = {res.has_i_property}",
        ]
        if not res.exact:
            lines.append("  (some rows budget-limited)")
        _emit(args, "\n".join(lines))
    return _budget_exit(args, not res.exact)


def _cmd_closed_form(args) -> int:
    fn = {
        "mu21": mu21_closed_form,
        "w": w_closed,
        "W": W_closed,
        "wY": wY_closed,
    }[args.which]
    value = fn(args.m, args.n)
    if args.format == "json":
        _emit(args, _jdump({"which": args.which, "m": args.m, "n": args.n,
                            "value": value}))
    else:
        _emit(args, str(value))
    return 0


def _cmd_verify(args) -> int:
    report = verify_suite(args.max_m, args.max_n, _budget_from(args))
    if args.format == "json":
        _emit(args, _jdump(report_to_json(report)))
    else:
        lines = []
        for c in report.claims:
            loc = f"({c.pair[0]},{c.pair[1]})" + (f" t={c.t}" if c.t is not None else "")
            lines.append(
                f"{c.status.upper():<8} {c.claim:<28} {loc:<14} "
                f"expected {c.expected}, got {c.got}"
            )
        lines.append(
            f"passed {report.passed}, failed {report.failed}, skipped {report.skipped}"
        )
        _emit(args, "\n".join(lines))
    if report.failed:
        return 1
    return _budget_exit(args, report.skipped > 0)


_DISPATCH = {
    "mu": _cmd_mu,
    "mu-table": _cmd_mu_table,
    "mu-params": _cmd_mu_params,
    "game": _cmd_game,
    "construct": _cmd_construct,
    "wrange": _cmd_wrange,
    "closed-form": _cmd_closed_form,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
