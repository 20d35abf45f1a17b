"""Command-line entry point: ``strongcolor <command> ...``.

Exit codes: 0 success, 1 verification failure / UNSAT / coloring failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .bench import SUITES, run_suite
from .caterpillar import Caterpillar, PrePalette, as_graph, solve_precolored, to_edge_coloring
from .coloring import IncompleteColoring, verify
from .exact import Aborted, Feasible, SearchAborted, SearchConfig, colorable_with, strong_chromatic_index
from .formats import FormatError, format_coloring, format_edge_list, read_coloring, read_graph, write_text
from .generators import (
    JellyfishSpec,
    gen_caterpillar,
    gen_counterexample,
    gen_high_girth_instance,
    gen_jellyfish,
    gen_random_tree,
    named_graph,
)
from .graph import GraphError, bridges, girth, sigma
from .planar import ColoringFailure, color_graph


class UsageError(Exception):
    pass


def _metrics(args, out: TextIO) -> int:
    g = read_graph(args.file)
    s = sigma(g) if g.edge_count else "undefined"
    gi = girth(g)
    gi = "inf" if gi == math.inf else gi
    out.write(
        f"n={g.n} m={g.edge_count} sigma={s} girth={gi} delta={g.max_degree()} bridges={len(bridges(g))}\n"
    )
    return 0


def _verify(args, out: TextIO) -> int:
    g = read_graph(args.file)
    c = read_coloring(args.coloring, g)
    try:
        problems = verify(g, c)
    except IncompleteColoring as exc:
        out.write(f"INCOMPLETE {len(exc.missing)} uncolored edge(s)\n")
        for e in exc.missing:
            out.write(f"UNCOLORED {g.edges[e][0]} {g.edges[e][1]}\n")
        return 1
    if not problems:
        out.write("OK\n")
        return 0
    for v in problems:
        (u1, v1), (u2, v2) = g.edges[v.e], g.edges[v.f]
        walk = " ".join(map(str, v.witness))
        out.write(f"CONFLICT {u1} {v1} {u2} {v2} {v.color + 1} {walk}\n")
    return 1


def _exact(args, out: TextIO) -> int:
    cfg = SearchConfig.from_env()
    g = read_graph(args.file)
    if args.kappa is None:
        if args.pre:
            raise UsageError("--pre needs --kappa")
        try:
            res = strong_chromatic_index(g, cfg)
        except SearchAborted as exc:
            out.write(f"ABORTED lower={exc.lower} upper={exc.upper} nodes={exc.nodes}\n")
            return 1
        out.write(f"chi_s={res.value} lower_bound={res.lower_bound} nodes={res.nodes}\n")
        if args.out:
            write_text(args.out, format_coloring(g, res.coloring), out)
        return 0
    pre = read_coloring(args.pre, g) if args.pre else None
    if pre is not None and pre.kappa > args.kappa:
        raise UsageError(f"pre-coloring declares kappa={pre.kappa} above --kappa {args.kappa}")
    res = colorable_with(g, args.kappa, pre.colors if pre else None, cfg)
    if isinstance(res, Feasible):
        out.write(f"SAT kappa={args.kappa} nodes={res.nodes}\n")
        if args.out:
            write_text(args.out, format_coloring(g, res.coloring), out)
        return 0
    if isinstance(res, Aborted):
        out.write(f"ABORTED kappa={args.kappa} nodes={res.nodes}\n")
        return 1
    if res.input_error:
        e, f = res.input_error
        out.write(f"INPUT-CONFLICT {g.edges[e][0]} {g.edges[e][1]} {g.edges[f][0]} {g.edges[f][1]}\n")
    out.write(f"UNSAT kappa={args.kappa} nodes={res.nodes}\n")
    return 1


def _color(args, out: TextIO) -> int:
    g = read_graph(args.file)
    kappa = args.kappa if args.kappa is not None else (sigma(g) if g.edge_count else 1)
    try:
        c = color_graph(g, kappa, SearchConfig.from_env())
    except ColoringFailure as exc:
        out.write(f"{exc}\n")
        return 1
    write_text(args.out, format_coloring(g, c), out)
    return 0


def _cat_solve(args, out: TextIO) -> int:
    try:
        cat = Caterpillar.parse(args.cat)
        pre = PrePalette.parse(args.pal)
        pre.validate(cat)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = solve_precolored(cat, pre, SearchConfig.from_env())
    if res.coloring is None:
        state = "ABORTED" if res.aborted else "UNSAT"
        out.write(f"{state} kappa={pre.kappa} nodes={res.nodes}\n")
        return 1
    lifted = " lifted" if res.lifted else ""
    out.write(f"# {cat} {pre.spec()} route={res.route}{lifted}\n")
    out.write(res.coloring.row() + "\n")
    if args.out:
        cg = as_graph(cat)
        text = format_coloring(cg.graph, to_edge_coloring(res.coloring, cg, pre.kappa), [str(cat)])
        write_text(args.out, text, out)
    return 0


def _base_graph(text: str):
    path = Path(text)
    if path.exists():
        return read_graph(path)
    return named_graph(text)


def _gen(args, out: TextIO) -> int:
    try:
        if args.counterexample:
            n, d = (int(x) for x in args.counterexample.split(","))
            g = gen_counterexample(n, d)
        elif args.jellyfish:
            g = gen_jellyfish(JellyfishSpec.parse(args.jellyfish))
        elif args.subdivide:
            base, k, s = args.subdivide
            g = gen_high_girth_instance(_base_graph(base), int(k), int(s))
        elif args.caterpillar:
            g = gen_caterpillar(Caterpillar.parse(args.caterpillar).degrees)
        elif args.tree is not None:
            if args.seed is None:
                raise UsageError("--tree needs --seed")
            g = gen_random_tree(args.tree, args.seed)
        else:
            g = named_graph(args.named)
    except (ValueError, GraphError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise UsageError(str(exc)) from None
    write_text(args.out, format_edge_list(g), out)
    return 0


def _bench(args, out: TextIO) -> int:
    if args.csv in (None, "-"):
        run_suite(args.suite, args.seed, out)
    else:
        with open(args.csv, "w", newline="") as fh:
            rows = run_suite(args.suite, args.seed, fh)
        out.write(f"wrote {rows} rows to {args.csv}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongcolor", description="Strong edge-coloring toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log engine warnings")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("metrics", help="print n, m, sigma, girth, max degree and bridge count")
    s.add_argument("file")
    s.set_defaults(func=_metrics)

    s = sub.add_parser("verify", help="check a coloring; prints OK or CONFLICT lines")
    s.add_argument("file")
    s.add_argument("coloring")
    s.set_defaults(func=_verify)

    s = sub.add_parser("exact", help="exact strong chromatic index, or SAT/UNSAT at --kappa")
    s.add_argument("file")
    s.add_argument("--kappa", type=int)
    s.add_argument("--pre", help="partial coloring to extend")
    s.add_argument("--out", help="write the witness coloring here ('-' for stdout)")
    s.set_defaults(func=_exact)

    s = sub.add_parser("color", help="color with sigma (or --kappa) colors via thread decomposition")
    s.add_argument("file")
    s.add_argument("--kappa", type=int)
    s.add_argument("--out", default="-")
    s.set_defaults(func=_color)

    s = sub.add_parser("cat-solve", help="solve a two-sided caterpillar boundary instance")
    s.add_argument("--cat", required=True, help="cat:d1,...,dl")
    s.add_argument("--pal", required=True, help="pal:kappa;a0;C1;Cl;al (1-based colors)")
    s.add_argument("--out", help="also write the coloring of the caterpillar graph here")
    s.set_defaults(func=_cat_solve)

    s = sub.add_parser("gen", help="emit a generated graph as an edge list")
    which = s.add_mutually_exclusive_group(required=True)
    which.add_argument("--counterexample", metavar="N,D")
    which.add_argument("--jellyfish", metavar="N:P1,...,PN")
    which.add_argument("--subdivide", nargs=3, metavar=("BASE", "K", "SIGMA"))
    which.add_argument("--caterpillar", metavar="cat:D1,...")
    which.add_argument("--tree", type=int, metavar="N")
    which.add_argument("--named", metavar="NAME")
    s.add_argument("--seed", type=int)
    s.add_argument("--out", default="-")
    s.set_defaults(func=_gen)

    s = sub.add_parser("bench", help="run a benchmark suite and emit CSV")
    s.add_argument("--suite", required=True, choices=sorted(SUITES))
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--csv", default="-")
    s.set_defaults(func=_bench)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (FormatError, GraphError, OSError) as exc:
        print(f"strongcolor: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
