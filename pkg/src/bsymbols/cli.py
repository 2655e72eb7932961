"""Command-line frontend.

Subcommands: symbol, kappa, families, avalues, compare, chain, verify,
hasse.  All output is deterministic; exit codes are 0 for success, 1 for a
verification failure, 2 for a parse error, 3 for an inadmissible N and 4
for incomparable inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .adjacency import adjacency_move, saturated_chain
from .errors import (
    NotAdmissible,
    NotAPartition,
    NotComparable,
    RankMismatch,
)
from .families import family_hasse, family_table
from .partitions import dominance_leq, format_partition
from .preorder import witness_step
from .symbols import Bipartition, Kappa, Symbol, a_value, kappa, symbol
from .verify import run_suites


def _record(s: Symbol, k: Kappa) -> dict:
    return {
        "b": s.b,
        "N": s.N,
        "row1": list(s.row1),
        "row2": list(s.row2),
        "kappa": list(k.entries),
    }


def cmd_symbol(args: argparse.Namespace) -> int:
    bp = Bipartition.parse(args.bipartition)
    s = symbol(bp, args.b, args.N)
    k = kappa(bp, args.b, args.N)
    if args.format == "json":
        print(json.dumps(_record(s, k), indent=2))
    else:
        print(f"b: {s.b}")
        print(f"N: {s.N}")
        print(f"row2: {format_partition(s.row2)}")
        print(f"row1: {format_partition(s.row1)}")
        print(f"kappa: {format_partition(k.entries)}")
    return 0


def cmd_kappa(args: argparse.Namespace) -> int:
    bp = Bipartition.parse(args.bipartition)
    k = kappa(bp, args.b, args.N)
    if args.format == "json":
        print(json.dumps(_record(symbol(bp, args.b, args.N), k), indent=2))
    else:
        print(format_partition(k.entries))
    return 0


def cmd_families(args: argparse.Namespace) -> int:
    table = family_table(args.n, args.b)
    if args.format == "json":
        doc = {
            "n": table.n,
            "b": table.b,
            "N": table.N,
            "families": [
                {
                    "kappa": list(f.kappa.entries),
                    "a": f.a,
                    "members": [m.text() for m in f.members],
                }
                for f in table.families
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        for f in table.families:
            members = ";".join(m.text() for m in f.members)
            print(f"{format_partition(f.kappa.entries)}\t{f.a}\t{len(f.members)}\t{members}")
    return 0


def cmd_avalues(args: argparse.Namespace) -> int:
    table = family_table(args.n, args.b)
    rows = sorted(
        (m.text(), f.a) for f in table.families for m in f.members
    )
    for text, a in rows:
        print(f"{text}\t{a}")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    a = Bipartition.parse(args.bipartition)
    c = Bipartition.parse(args.bipartition2)
    n = a.rank
    if c.rank != n:
        raise RankMismatch(f"ranks differ: {n} vs {c.rank}")
    ka = kappa(a, args.b, n).entries
    kc = kappa(c, args.b, n).entries
    if ka == kc:
        status = "EQ"
    elif dominance_leq(ka, kc):
        status = "LEQ"
    elif dominance_leq(kc, ka):
        status = "GEQ"
    else:
        status = "INCOMPARABLE"
    print(status)
    print(f"a({a.text()}) = {a_value(a, args.b)}")
    print(f"a({c.text()}) = {a_value(c, args.b)}")
    return 0


def cmd_chain(args: argparse.Namespace) -> int:
    a = Bipartition.parse(args.bipartition)
    c = Bipartition.parse(args.bipartition2)
    chain = saturated_chain(a, c, args.b)
    n = a.rank
    steps = []
    for t in range(len(chain) - 1):
        x, y = chain[t], chain[t + 1]
        kx = kappa(x, args.b, n).entries
        ky = kappa(y, args.b, n).entries
        if kx == ky:
            steps.append((x, kx, None, None))
        else:
            steps.append((x, kx, adjacency_move(x, y, args.b), witness_step(x, y, args.b)))
    if args.format == "json":
        doc = {
            "b": args.b,
            "chain": [bp.text() for bp in chain],
            "steps": [
                {
                    "step": t,
                    "from": chain[t].text(),
                    "to": chain[t + 1].text(),
                    "kappa_before": list(kx),
                    "kappa_after": list(kappa(chain[t + 1], args.b, n).entries),
                    "move": None if move is None else [move.k1, move.k2],
                    "nu": None if w is None else w.nu.text(),
                    "l": None if w is None else w.l,
                    "transposed": None if w is None else w.transposed,
                }
                for t, (x, kx, move, w) in enumerate(steps)
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        for t, (x, kx, move, w) in enumerate(steps):
            if move is None:
                print(f"{x.text()}\tkappa={format_partition(kx)}\tmove=-\twitness=family")
            else:
                flag = "yes" if w.transposed else "no"
                print(
                    f"{x.text()}\tkappa={format_partition(kx)}\tmove={move}"
                    f"\tnu={w.nu.text()}\tl={w.l}\ttransposed={flag}"
                )
        last = chain[-1]
        print(f"{last.text()}\tkappa={format_partition(kappa(last, args.b, n).entries)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    b_list = tuple(sorted({int(v) for v in args.b_list.split(",")}))
    results = run_suites(args.max_n, b_list, oracle=args.oracle)
    failed = False
    for r in results:
        if r.ok:
            print(f"PASS {r.name} ({r.detail})")
        else:
            failed = True
            print(f"FAIL {r.name}: {r.detail}")
    print("FAILED" if failed else "OK")
    return 1 if failed else 0


def cmd_hasse(args: argparse.Namespace) -> int:
    table = family_table(args.n, args.b)
    diagram = family_hasse(table)
    print(f"digraph families_n{args.n}_b{args.b} {{")
    print("  rankdir=BT;")
    for i, node in enumerate(diagram.nodes):
        a = table.families[i].a
        print(f'  k{i} [label="{format_partition(node.entries)}\\na={a}"];')
    for i, j in diagram.edges:
        print(f"  k{i} -> k{j};")
    print("}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsymbols",
        description="Symbols, families and the dominance order for type B Weyl groups.",
    )
    sub = parser.add_subparsers(required=True)

    def add(name: str, func, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("symbol", cmd_symbol, help="print the (b, N)-symbol and kappa of a bipartition")
    p.add_argument("bipartition", help="textual form, e.g. 5,1|2,2,1")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("kappa", cmd_kappa, help="print the kappa vector of a bipartition")
    p.add_argument("bipartition")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("families", cmd_families, help="group the bipartitions of n into families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = add("avalues", cmd_avalues, help="a-value of every bipartition of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = add("compare", cmd_compare, help="compare two bipartitions under dominance")
    p.add_argument("bipartition")
    p.add_argument("bipartition2")
    p.add_argument("--b", type=int, required=True)

    p = add("chain", cmd_chain, help="saturated chain with one witness per step")
    p.add_argument("bipartition")
    p.add_argument("bipartition2")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("verify", cmd_verify, help="run the property suites")
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--b-list", default="0,1,2,3", dest="b_list")
    p.add_argument("--oracle", action="store_true")

    p = add("hasse", cmd_hasse, help="Hasse diagram of the families as a dot graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # bipartitions such as -|1,1,1 start with a dash; hand them to argparse
    # behind the positional separator so they are not read as options
    pipe_args = [t for t in argv if "|" in t]
    if pipe_args and "--" not in argv:
        argv = [t for t in argv if "|" not in t] + ["--"] + pipe_args
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAPartition as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NotAdmissible as exc:
        print(f"admissibility error: {exc}", file=sys.stderr)
        return 3
    except (NotComparable, RankMismatch) as exc:
        print(f"incomparable: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
