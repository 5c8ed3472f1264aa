"""Command-line front end.

Graphs cross the boundary as graph6 text, one per line, on stdin and
stdout; DOT output is available behind an explicit flag.  Verification
subcommands exit 0 on pass, 1 on fail, and usage problems exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GraphError
from .families import closed_form_table
from .graphs import decode_graph6, encode_graph6, to_dot
from .mis import count_mis
from .structure import (
    block_decomposition,
    count_cycles,
    cycles_pairwise_disjoint,
    cyclomatic_number,
    ear_decomposition,
    find_terminal_endblock,
    has_intersecting_cycles,
)
from .verify import CLASSIC_THEOREMS, verify_classic, verify_part_one, verify_part_two

BUILDERS_HELP = "one of: G, Gprime, C, E, complete, path, cycle"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mismax",
        description="Count maximal independent sets and verify extremal bounds "
        "for graphs with few cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("count", help="read graph6 lines on stdin, print m(G) per line")

    p_build = sub.add_parser("build", help="emit an extremal family graph")
    p_build.add_argument("family", help=BUILDERS_HELP)
    p_build.add_argument("n", type=int, nargs="?", help="vertex count")
    p_build.add_argument("r", type=int, nargs="?", help="cycle budget")
    p_build.add_argument("--dot", action="store_true", help="emit DOT instead of graph6")

    p_form = sub.add_parser("formulas", help="table of closed-form maxima")
    p_form.add_argument("--max-n", type=int, default=20)
    p_form.add_argument("--max-r", type=int, default=4)
    p_form.add_argument("--json", action="store_true")

    p_an = sub.add_parser("analyze", help="structural report for graph6 input")
    p_an.add_argument("graph6", nargs="?", help="graph6 text; stdin when omitted")
    p_an.add_argument("--cycle-limit", type=int, default=1000)

    p_ver = sub.add_parser("verify", help="exhaustive verification of one bound")
    p_ver.add_argument("what", choices=("part1", "part2") + CLASSIC_THEOREMS)
    p_ver.add_argument("n", type=int)
    p_ver.add_argument("r", type=int, nargs="?")
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--shards", type=int, default=1)

    p_sw = sub.add_parser("sweep", help="run verify over a parameter grid")
    p_sw.add_argument(
        "--what",
        nargs="+",
        default=["part1", "part2"],
        choices=("part1", "part2") + CLASSIC_THEOREMS,
    )
    p_sw.add_argument("--max-n", type=int, default=8)
    p_sw.add_argument("--r", type=int, nargs="+", default=[1, 2])
    p_sw.add_argument("--json", action="store_true")
    p_sw.add_argument("--shards", type=int, default=1)
    return parser


def _cmd_count(_args: argparse.Namespace) -> int:
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        print(count_mis(decode_graph6(line)))
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    from . import families, graphs

    family = args.family
    n, r = args.n, args.r
    if family == "E":
        g = graphs.exceptional_graph()
    elif n is None:
        raise GraphError(f"family {family!r} needs a vertex count")
    elif family == "G":
        g = (
            families.extremal_bounded_graph(n, r)
            if r is not None
            else families.extremal_graph(n)
        )
    elif family == "Gprime":
        g = families.extremal_graph_alt(n)
    elif family == "C":
        g = (
            families.extremal_bounded_connected_graph(n, r)
            if r is not None
            else families.extremal_connected_graph(n)
        )
    elif family == "complete":
        g = graphs.complete(n)
    elif family == "path":
        g = graphs.path(n)
    elif family == "cycle":
        g = graphs.cycle(n)
    else:
        raise GraphError(f"unknown family {family!r}; expected {BUILDERS_HELP}")
    sys.stdout.write(to_dot(g) if args.dot else encode_graph6(g) + "\n")
    return 0


def _cmd_formulas(args: argparse.Namespace) -> int:
    rows = closed_form_table(args.max_n, args.max_r)
    if args.json:
        print(
            json.dumps(
                [
                    {"formula": t.formula, "n": t.n, "r": t.r, "value": t.value}
                    for t in rows
                ],
                indent=2,
            )
        )
        return 0
    print("formula\tn\tr\tvalue")
    for t in rows:
        r = "" if t.r is None else t.r
        print(f"{t.formula}\t{t.n}\t{r}\t{t.value}")
    return 0


def _analyze_one(line: str, cycle_limit: int) -> dict:
    g = decode_graph6(line)
    bd = block_decomposition(g)
    ears = {}
    for i, block in enumerate(bd.blocks):
        if block.bit_count() >= 3:
            ed = ear_decomposition(g, block)
            ears[str(i)] = {
                "base_cycle": list(ed.base_cycle),
                "ears": [list(e) for e in ed.ears],
            }
    census = count_cycles(g, cycle_limit)
    report = {
        "graph6": encode_graph6(g),
        "order": g.order,
        "edges": g.edge_count,
        "blocks": [sorted(_bits(b)) for b in bd.blocks],
        "cutvertices": sorted(_bits(bd.cutvertices)),
        "endblocks": list(bd.endblocks()),
        "terminal_endblock": find_terminal_endblock(g) if bd.blocks else None,
        "ears": ears,
        "cycles": {
            "count": census.count,
            "limit": census.limit,
            "saturated": census.saturated,
        },
        "cyclomatic": cyclomatic_number(g),
        "blocks_are_edges_or_cycles": cycles_pairwise_disjoint(g),
        "has_intersecting_cycles": has_intersecting_cycles(g),
    }
    return report


def _bits(mask: int) -> list[int]:
    from .graphs import iter_bits

    return list(iter_bits(mask))


def _cmd_analyze(args: argparse.Namespace) -> int:
    lines = [args.graph6] if args.graph6 else [ln.strip() for ln in sys.stdin]
    reports = [_analyze_one(ln, args.cycle_limit) for ln in lines if ln]
    out = reports[0] if len(reports) == 1 else reports
    print(json.dumps(out, indent=2))
    return 0


def _run_verify(what: str, n: int, r: int | None, shards: int):
    if what == "part1":
        if r is None:
            raise GraphError("part1 needs a cycle budget r")
        return verify_part_one(n, r, shards=shards)
    if what == "part2":
        if r is None:
            raise GraphError("part2 needs a cycle budget r")
        return verify_part_two(n, r, shards=shards)
    return verify_classic(n, what, shards=shards)


def _print_report(report, as_json: bool) -> None:
    if as_json:
        print(report.to_json())
        return
    spec = report.spec
    label = spec.family if spec.r is None else f"{spec.family} r={spec.r}"
    print(
        f"{label} n={spec.n}: {report.family_size} graphs, "
        f"maximum {report.maximum} (expected {report.expected_maximum})"
    )
    print(f"maximizers: {' '.join(report.maximizers)}")
    if report.expected_maximizers is not None:
        print(f"expected:   {' '.join(report.expected_maximizers)}")
    print(f"verdict: {'pass' if report.verdict else 'fail'}")


def _cmd_verify(args: argparse.Namespace) -> int:
    report = _run_verify(args.what, args.n, args.r, args.shards)
    _print_report(report, args.json)
    return 0 if report.verdict else 1


def _sweep_cells(what: str, max_n: int, r_values: list[int]):
    if what in ("part1", "part2"):
        low = {"part1": lambda r: max(2, 3 * r - 1), "part2": lambda r: 3 * r}[what]
        for r in r_values:
            for n in range(low(r), max_n + 1):
                yield what, n, r
    else:
        lo = {"moonmoser": 2, "ggg": 6, "trees": 1, "forests": 1}[what]
        hi = min(max_n, 9 if what in ("moonmoser", "ggg") else 12)
        for n in range(lo, hi + 1):
            yield what, n, None


def _cmd_sweep(args: argparse.Namespace) -> int:
    reports = []
    for what in args.what:
        for cell in _sweep_cells(what, args.max_n, args.r):
            reports.append(_run_verify(cell[0], cell[1], cell[2], args.shards))
    if args.json:
        print(json.dumps([rep.as_dict() for rep in reports], indent=2))
    else:
        for rep in reports:
            spec = rep.spec
            r = "" if spec.r is None else f" r={spec.r}"
            status = "pass" if rep.verdict else "FAIL"
            print(
                f"{spec.family} n={spec.n}{r}: {status} "
                f"(maximum {rep.maximum}, {rep.family_size} graphs, "
                f"{rep.elapsed_ms:.0f} ms)"
            )
    return 0 if all(rep.verdict for rep in reports) else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "build": _cmd_build,
        "formulas": _cmd_formulas,
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
