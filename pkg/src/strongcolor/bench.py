"""Benchmark suites; each yields CSV rows ``instance,sigma,kappa,result,nodes,millis``."""

from __future__ import annotations

import csv
import random
import time
from typing import Callable, Iterator, NamedTuple, TextIO

from . import tables
from .caterpillar import (
    Caterpillar,
    PrePalette,
    as_graph,
    derive_reduced,
    ell_min,
    exact_boundary_search,
    large_set,
    solve_precolored,
    tight_family,
)
from .coloring import is_strong, max_antimatching
from .exact import SearchConfig, strong_chromatic_index
from .generators import (
    JellyfishSpec,
    gen_counterexample,
    gen_high_girth_instance,
    gen_jellyfish,
    gen_random_tree,
    jellyfish_index,
    named_graph,
)
from .graph import Graph, sigma
from .planar import ColoringFailure, color_graph, color_tree

COLUMNS = ("instance", "sigma", "kappa", "result", "nodes", "millis")


class Row(NamedTuple):
    instance: str
    sigma: int
    kappa: int
    result: str
    nodes: int
    millis: float


def _timed(fn: Callable[[], tuple[str, int]]) -> tuple[str, int, float]:
    start = time.perf_counter()
    result, nodes = fn()
    return result, nodes, round(1000 * (time.perf_counter() - start), 3)


def random_boundary(cat: Caterpillar, kappa: int, rng: random.Random) -> PrePalette:
    palette = list(range(kappa))
    first = rng.sample(palette, cat.degrees[0])
    last = rng.sample(palette, cat.degrees[-1])
    if cat.length == 1:
        last = first
    return PrePalette(frozenset(palette), rng.choice(first), frozenset(first), frozenset(last), rng.choice(last))


def random_nice(s: int, rng: random.Random) -> Caterpillar:
    """A caterpillar with sigma exactly s, Delta <= s - 2 and length ell_min(s)."""
    while True:
        cat = Caterpillar(tuple(rng.randint(2, s - 2) for _ in range(ell_min(s))))
        if cat.sigma == s:
            return cat


def suite_tables(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    for name, (cat, raw) in tables.TABLES.items():
        cg = as_graph(cat)
        for i in range(len(raw)):
            def run():
                ok = is_strong(cg.graph, tables.load_fixture(name, i))
                return ("ok" if ok else "violation"), 0
            yield Row(f"{name}#{i + 1}", cat.sigma, cat.sigma, *_timed(run))


def suite_reductions(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    for spec, expected in tables.SIGMA7_REDUCTIONS:
        cat = Caterpillar.parse(spec)
        def run():
            got = str(derive_reduced(cat, large_set(cat)).drop_last())
            return ("ok" if got == expected else f"mismatch:{got}"), 0
        yield Row(spec, cat.sigma, cat.sigma, *_timed(run))


def suite_trees(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    for i in range(200):
        t = gen_random_tree(2 + (seed + i) % 39, seed * 1000 + i)
        s = sigma(t)
        def run():
            return ("ok" if is_strong(t, color_tree(t, s)) else "violation"), 0
        yield Row(f"tree{i}:n={t.n}", s, s, *_timed(run))


def suite_envelope(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    rng = random.Random(seed)
    for s in (5, 6, 7, 8, 9):
        for i in range(100):
            cat = random_nice(s, rng)
            pre = random_boundary(cat, s + rng.randint(0, 1), rng)
            def run():
                res = solve_precolored(cat, pre, cfg)
                if res.coloring is None:
                    return "infeasible", res.nodes
                good = res.coloring.is_valid(cat) and res.coloring.meets(pre)
                return (res.route if good else "invalid"), res.nodes
            yield Row(f"{cat}|{pre.spec()}", s, pre.kappa, *_timed(run))


def suite_certificates(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    cases = [(Caterpillar((3, 4, 3, 3, 4, 3)), PrePalette.parse("pal:6;1;1,2,3;4,5,6;6"))]
    cases += [tight_family(s) for s in (5, 6, 7, 8)]
    for cat, pre in cases:
        def run():
            res = exact_boundary_search(cat, pre, cfg)
            return ("sat" if res.feasible else "aborted" if res.aborted else "unsat"), res.nodes
        yield Row(f"{cat}|{pre.spec()}", cat.sigma, pre.kappa, *_timed(run))


def suite_counterexample(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    for n in (1, 2, 3):
        for d in (3, 4):
            g = gen_counterexample(n, d)
            start = time.perf_counter()
            res = strong_chromatic_index(g, cfg)
            millis = round(1000 * (time.perf_counter() - start), 3)
            verdict = "gap" if res.value > sigma(g) else "no-gap"
            yield Row(f"G({3 * n + 1},{d})", sigma(g), res.value, verdict, res.nodes, millis)


def suite_jellyfish(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    rng = random.Random(seed)
    done = 0
    while done < 100:
        n = rng.randint(3, 10)
        spec = JellyfishSpec(n, tuple(rng.choice((0, 0, 1, 1, 2, 3)) for _ in range(n)))
        if spec.sigma < 4 or spec.edge_count > 24:
            continue
        done += 1
        def run():
            res = strong_chromatic_index(gen_jellyfish(spec), cfg)
            want = jellyfish_index(spec)
            return ("ok" if res.value == want else f"mismatch:{want}!={res.value}"), res.nodes
        label = f"{spec.n}:" + ",".join(map(str, spec.pendants))
        yield Row(label, spec.sigma, jellyfish_index(spec), *_timed(run))


def suite_pipeline(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    for name, k in (("cube", 11), ("K4", 14), ("petersen", 9)):
        g = gen_high_girth_instance(named_graph(name), k, 5)
        def run():
            try:
                col = color_graph(g, 5, cfg)
            except ColoringFailure as exc:
                return str(exc), 0
            return ("ok" if is_strong(g, col) else "violation"), 0
        yield Row(f"{name}/k={k}", sigma(g), 5, *_timed(run))


def suite_duality(cfg: SearchConfig, seed: int) -> Iterator[Row]:
    rng = random.Random(seed)
    for i in range(100):
        n = rng.randint(4, 10)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        g = Graph(n, pairs[: rng.randint(1, min(20, len(pairs)))])
        start = time.perf_counter()
        am = max_antimatching(g)[0]
        res = strong_chromatic_index(g, cfg)
        millis = round(1000 * (time.perf_counter() - start), 3)
        verdict = f"am={am}" if sigma(g) <= am <= res.value else f"broken:am={am}"
        yield Row(f"random{i}:n={n},m={g.edge_count}", sigma(g), res.value, verdict, res.nodes, millis)


SUITES: dict[str, Callable[[SearchConfig, int], Iterator[Row]]] = {
    "tables": suite_tables,
    "reductions": suite_reductions,
    "trees": suite_trees,
    "envelope": suite_envelope,
    "certificates": suite_certificates,
    "counterexample": suite_counterexample,
    "jellyfish": suite_jellyfish,
    "pipeline": suite_pipeline,
    "duality": suite_duality,
}


def run_suite(name: str, seed: int, out: TextIO, cfg: SearchConfig | None = None) -> int:
    """Write the suite's CSV to ``out``; returns the number of rows."""
    cfg = cfg or SearchConfig.from_env()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    count = 0
    for row in SUITES[name](cfg, seed):
        writer.writerow(row)
        count += 1
    return count

