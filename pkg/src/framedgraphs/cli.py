"""Command-line surface: dimension tables, verification suites, invariants.

Exit codes: 0 = pass, 1 = verification failure, 2 = usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .graphs import Graph, RED, canonical_form, enumerate_graphs
from .linalg import LinComb
from .reduction import psi, red_normal_form
from .fourterm import fc_span, sub_bialgebra_dims, tree_action
from .invariants import framed_chromatic, w_invariant
from .verify import SUITES, run_suite

DEFAULT_MAX_N = 6

DIMS_COLUMNS = (
    "n",
    "red_classes",
    "connected_red_classes",
    "rank_fc",
    "dim_L",
    "dim_PN",
    "dim_PBL",
    "dim_PWL",
)


class UsageError(Exception):
    pass


def dims_rows(max_n):
    rows = []
    for n in range(max_n + 1):
        red = len(enumerate_graphs(n, (RED,)))
        conn = len(enumerate_graphs(n, (RED,), connected_only=True))
        rank = fc_span(n).rank
        pbl, pwl, pl = sub_bialgebra_dims(n)
        rows.append(
            dict(
                zip(
                    DIMS_COLUMNS,
                    (n, red, conn, rank, red - rank, pl, pbl, pwl),
                )
            )
        )
    return rows


def _emit_table(rows, columns, fmt, out):
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([row[c] for c in columns])
    else:
        widths = [
            max(len(c), max((len(str(r[c])) for r in rows), default=0))
            for c in columns
        ]
        out.write(
            "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n"
        )
        for row in rows:
            out.write(
                "  ".join(
                    str(row[c]).ljust(w) for c, w in zip(columns, widths)
                ).rstrip()
                + "\n"
            )


def _load_graph(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise UsageError("malformed JSON in %s: %s" % (path, e))
    try:
        return Graph.from_json_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError("bad graph in %s: %s" % (path, e))


def cmd_dims(args, out):
    if args.max_n > DEFAULT_MAX_N and not args.force:
        raise UsageError(
            "max-n %d exceeds the resource guard (%d); pass --force to override"
            % (args.max_n, DEFAULT_MAX_N)
        )
    _emit_table(dims_rows(args.max_n), DIMS_COLUMNS, args.format, out)
    return 0


def cmd_verify(args, out):
    if args.max_n > DEFAULT_MAX_N and not args.force:
        raise UsageError(
            "max-n %d exceeds the resource guard (%d); pass --force to override"
            % (args.max_n, DEFAULT_MAX_N)
        )
    if args.suite == "all":
        names = list(SUITES)
    else:
        names = [args.suite]
    reports = [
        run_suite(name, args.max_n, seed=args.seed, samples=args.samples)
        for name in names
    ]
    ok = all(r["ok"] for r in reports)
    if args.format == "json":
        json.dump(reports if len(reports) > 1 else reports[0], out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            out.write(
                "suite %-16s max_n=%d %s (%.2fs, seed=%d)\n"
                % (
                    r["suite"],
                    r["max_n"],
                    "PASS" if r["ok"] else "FAIL",
                    r["elapsed_s"],
                    r["seed"],
                )
            )
            for c in r["checks"]:
                out.write(
                    "  %-45s %s\n" % (c["name"], "ok" if c["ok"] else "FAIL")
                )
            if not r["ok"]:
                out.write(
                    "  failures:\n%s\n" % json.dumps(r["failures"], indent=2)
                )
    return 0 if ok else 1


def cmd_invariant(args, out):
    g = _load_graph(args.graph)
    if not g.is_red_only():
        raise UsageError(
            "graph has black edges; the invariants are defined on red-only "
            "graphs (use `reduce --to red` first)"
        )
    x = LinComb.unit(canonical_form(g))
    chrom = framed_chromatic(x)
    result = {"chromatic": str(chrom), "w": str(w_invariant(x))}
    if args.eval:
        values = {}
        for part in args.eval.split(","):
            name, _, val = part.partition("=")
            if name.strip() not in ("s0", "s1") or not val:
                raise UsageError("bad --eval syntax; expected s0=A,s1=B")
            values[name.strip()] = val
        if set(values) != {"s0", "s1"}:
            raise UsageError("--eval needs both s0 and s1")
        result["chromatic_at"] = str(chrom.evaluate(values["s0"], values["s1"]))
    json.dump(result, out)
    out.write("\n")
    return 0


def cmd_reduce(args, out):
    g = _load_graph(args.graph)
    x = LinComb.unit(canonical_form(g))
    if args.to == "red":
        result = red_normal_form(x)
    else:
        result = psi(x)
    json.dump(result.to_json_list(), out, indent=2)
    out.write("\n")
    return 0


def cmd_act(args, out):
    g = _load_graph(args.graph)
    if args.tree < 1:
        raise UsageError("--tree must be at least 1")
    # All framing-0 trees on N vertices coincide in the quotient; the path
    # is used as the representative.
    path = Graph.make(
        args.tree,
        (0,) * args.tree,
        [(i, i + 1, RED) for i in range(args.tree - 1)],
    )
    try:
        result = tree_action(path, g)
    except ValueError as e:
        raise UsageError(str(e))
    x = LinComb.unit(result)
    json.dump(
        {
            "graph": result.to_json_dict(),
            "chromatic": str(framed_chromatic(x)),
            "w": str(w_invariant(x)),
        },
        out,
    )
    out.write("\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="framedgraphs",
        description=(
            "Exact computations in the framed colored graph bialgebras: "
            "dimension tables, verification suites, and 4-invariants."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv", "text"),
                        default="text")
        sp.add_argument("--force", action="store_true",
                        help="override the max-n resource guard")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for sampled property checks")
        sp.add_argument("--samples", type=int, default=100,
                        help="sample count for randomized checks")
        sp.add_argument("--workers", type=int, default=1,
                        help="worker count (accepted for config parity; "
                             "evaluation is sequential and deterministic)")

    sp = sub.add_parser("dims", help="graded dimension table")
    sp.add_argument("--max-n", type=int, default=4)
    common(sp)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.add_argument("--max-n", type=int, default=4)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("invariant", help="invariants of a red-only graph")
    sp.add_argument("--graph", required=True, help="JSON graph file")
    sp.add_argument("--eval", help="numeric evaluation point, s0=A,s1=B")
    common(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("reduce", help="rewrite a graph in the red or black basis")
    sp.add_argument("--graph", required=True, help="JSON graph file")
    sp.add_argument("--to", choices=("red", "black"), required=True)
    common(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("act", help="attach a framing-0 tree by one red edge")
    sp.add_argument("--tree", type=int, required=True,
                    help="number of tree vertices")
    sp.add_argument("--graph", required=True, help="JSON graph file")
    common(sp)
    sp.set_defaults(func=cmd_act)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
