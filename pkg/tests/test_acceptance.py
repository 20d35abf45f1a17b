"""Acceptance gate: one PASS/FAIL line per criterion, listed again at the end of the run.

Criteria that fail for reasons outside the code are marked xfail(strict=True)
with the reason; their line still says FAIL, and they turn the run red if
they ever start passing.
"""

import itertools
import random
import time

import networkx as nx
import pytest

from strongcolor import tables
from strongcolor.bench import random_boundary, random_nice
from strongcolor.caterpillar import (
    Caterpillar,
    PrePalette,
    as_graph,
    derive_reduced,
    exact_boundary_search,
    large_set,
    solve_precolored,
    to_edge_coloring,
)
from strongcolor.coloring import is_strong, max_antimatching, verify
from strongcolor.exact import strong_chromatic_index
from strongcolor.generators import (
    JellyfishSpec,
    gen_counterexample,
    gen_high_girth_instance,
    gen_jellyfish,
    gen_random_tree,
    jellyfish_index,
    named_graph,
)
from strongcolor.graph import Graph, girth, sigma
from strongcolor.planar import color_graph, color_tree, girth_threshold

RESULTS: list[str] = []


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num} {'PASS' if ok else 'FAIL'} {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def pal(kappa, a0, first, last, al):
    return PrePalette(frozenset(range(kappa)), a0 - 1, frozenset(c - 1 for c in first), frozenset(c - 1 for c in last), al - 1)


@pytest.mark.xfail(strict=True, reason="row 2 of the Cat(4,3,4,3,4,3) table repeats color 5 at x5 as printed")
def test_criterion_1_table_fixtures():
    start = time.perf_counter()
    bad = []
    total = 0
    for name, (cat, raw) in tables.TABLES.items():
        g = as_graph(cat).graph
        for i in range(len(raw)):
            total += 1
            problems = verify(g, tables.load_fixture(name, i))
            if problems:
                bad.append(f"{name} row {i + 1} ({len(problems)} violation)")
    secs = time.perf_counter() - start
    ok = not bad and total == 35 and secs < 1
    record(1, "table fixtures", ok, f"{total - len(bad)}/{total} rows verify in {secs:.3f}s; failing: {bad or 'none'}")


def test_criterion_2_reduction_table():
    start = time.perf_counter()
    wrong = []
    for spec, expected in tables.SIGMA7_REDUCTIONS:
        got = str(derive_reduced(Caterpillar.parse(spec), large_set(Caterpillar.parse(spec))).drop_last())
        if got != expected:
            wrong.append(f"{spec} -> {got} (want {expected})")
    secs = time.perf_counter() - start
    ok = not wrong and len(tables.SIGMA7_REDUCTIONS) == 14 and secs < 1
    record(2, "reduction table", ok, f"{14 - len(wrong)}/14 rows match in {secs:.3f}s; mismatches: {wrong or 'none'}")


def test_criterion_3_trees():
    start = time.perf_counter()
    bad = []
    for i in range(200):
        t = gen_random_tree(2 + i % 39, 3000 + i)
        s = sigma(t)
        c = color_tree(t, s)
        if not is_strong(t, c) or max(c.colors.values()) >= s:
            bad.append(f"random tree {i}")
    exhaustive = 0
    for n in range(2, 11):
        for tree in nx.nonisomorphic_trees(n):
            t = Graph(n, list(tree.edges))
            exhaustive += 1
            if strong_chromatic_index(t).value != sigma(t):
                bad.append(f"tree {sorted(tree.edges)}")
    secs = time.perf_counter() - start
    ok = not bad and exhaustive == 200 and secs < 120
    record(3, "trees", ok, f"200 random trees colored with sigma colors; chi_s = sigma on all {exhaustive} trees with n <= 10; {secs:.1f}s; failures: {bad or 'none'}")


def test_criterion_4_envelope():
    start = time.perf_counter()
    bad = []
    cat = Caterpillar((3,) * 8)
    canonical = 0
    for last in itertools.combinations(range(5), 3):
        for al in last:
            pre = PrePalette(frozenset(range(5)), 0, frozenset({0, 1, 2}), frozenset(last), al)
            res = solve_precolored(cat, pre)
            canonical += 1
            cg = as_graph(cat)
            if res.route != "constructive" or res.lifted or not is_strong(cg.graph, to_edge_coloring(res.coloring, cg)):
                bad.append(pre.spec())
    counts = {}
    for s in (6, 7):
        rng = random.Random(600 + s)
        counts[s] = 0
        for _ in range(500):
            t = random_nice(s, rng)
            pre = random_boundary(t, s, rng)
            res = solve_precolored(t, pre)
            cg = as_graph(t)
            if not res.feasible or not res.coloring.meets(pre) or not is_strong(cg.graph, to_edge_coloring(res.coloring, cg)):
                bad.append(f"{t} {pre.spec()}")
            elif res.route == "constructive":
                counts[s] += 1
    secs = time.perf_counter() - start
    ok = not bad and canonical == 30 and secs < 300
    record(
        4,
        "caterpillar envelope",
        ok,
        f"sigma 5: {canonical} canonical boundaries constructive; sigma 6: 500 feasible ({counts[6]} constructive); "
        f"sigma 7: 500 feasible ({counts[7]} constructive); {secs:.1f}s; failures: {bad[:3] or 'none'}",
    )


def test_criterion_5_certificates():
    start = time.perf_counter()
    cases = [
        (Caterpillar((3, 4, 3, 3, 4, 3)), pal(6, 1, {1, 2, 3}, {4, 5, 6}, 6)),
        (Caterpillar((4,) * 6), pal(7, 1, {1, 2, 3, 4}, {1, 2, 3, 4}, 1)),
        (Caterpillar((4, 5, 4, 5, 4, 5, 4)), pal(8, 1, {1, 2, 3, 4}, {5, 6, 7, 8}, 5)),
    ]
    parts = []
    ok = True
    for cat, pre in cases:
        res = exact_boundary_search(cat, pre)
        proven = not res.feasible and not res.aborted
        ok &= proven
        parts.append(f"{cat} {'UNSAT' if proven else 'SAT' if res.feasible else 'ABORTED'} ({res.nodes} nodes)")
    secs = time.perf_counter() - start
    record(5, "infeasibility certificates", ok, "; ".join(parts) + f"; {secs:.1f}s")


def test_criterion_6_counterexample_family():
    start = time.perf_counter()
    parts = []
    ok = True
    for n in (1, 2, 3):
        for d in (3, 4):
            g = gen_counterexample(n, d)
            chi = strong_chromatic_index(g).value
            good = sigma(g) == d + 1 and g.max_degree() == d and chi >= sigma(g) + 1
            ok &= good
            parts.append(f"G({3 * n + 1},{d}) sigma={sigma(g)} chi_s={chi}")
    secs = time.perf_counter() - start
    record(6, "counterexample family", ok and secs < 300, "; ".join(parts) + f"; {secs:.1f}s")


def _canonical(p):
    forms = []
    for s in (p, p[::-1]):
        forms += [s[r:] + s[:r] for r in range(len(s))]
    return min(forms)


def _branch(spec):
    n, deg, s = spec.n, spec.degrees, spec.sigma
    if n == 3:
        return "n=3"
    if n == 4:
        return "n=4"
    if n == 7 and set(deg) == {3}:
        return "(7,3)"
    if n == 10 and s == 4 and jellyfish_index(spec) == 5:
        return "(10,4)"
    return "other"


@pytest.mark.xfail(strict=True, reason="the closed form predicts sigma on some n = 7 and n = 10 jellyfish that need sigma + 1")
def test_criterion_7_jellyfish():
    start = time.perf_counter()
    specs = set()
    for n in range(3, 11):
        for p in itertools.product(range(4), repeat=n):
            spec = JellyfishSpec(n, _canonical(p))
            if spec.sigma >= 4 and spec.edge_count <= 20:
                specs.add(spec)
    rng = random.Random(7)
    sampled = 0
    while sampled < 100:
        n = rng.randint(3, 9)
        spec = JellyfishSpec(n, tuple(rng.randint(0, 4) for _ in range(n)))
        if spec.sigma >= 4 and spec.edge_count <= 24:
            specs.add(spec)
            sampled += 1
    mismatches = []
    branches = set()
    for spec in sorted(specs, key=lambda x: (x.n, x.pendants)):
        want = jellyfish_index(spec)
        got = strong_chromatic_index(gen_jellyfish(spec)).value
        branches.add(_branch(spec))
        if want != got:
            mismatches.append(f"{spec.n}:{','.join(map(str, spec.pendants))} formula={want} exact={got}")
    secs = time.perf_counter() - start
    covered = {"n=3", "n=4", "(7,3)", "(10,4)"} <= branches
    ok = not mismatches and covered and secs < 600
    record(
        7,
        "jellyfish closed form",
        ok,
        f"{len(specs)} specs, {len(mismatches)} mismatches, special branches covered={covered}, {secs:.1f}s; "
        f"first mismatches: {mismatches[:4] or 'none'}",
    )


def test_criterion_8_pipeline():
    parts = []
    ok = True
    for name, k in (("cube", 11), ("K4", 14)):
        g = gen_high_girth_instance(named_graph(name), k, 5)
        start = time.perf_counter()
        c = color_graph(g, 5)
        secs = time.perf_counter() - start
        good = (
            verify(g, c) == []
            and max(c.colors.values()) < 5
            and sigma(g) == 5
            and g.max_degree() == 3
            and girth(g) >= girth_threshold(5)
            and secs < 10
        )
        ok &= good
        parts.append(f"{name} k={k}: n={g.n} m={g.edge_count} girth={girth(g)} 5-coloring verified={good} in {secs:.2f}s")
    record(8, "end-to-end pipeline", ok, "; ".join(parts))


def test_criterion_9_duality_chain():
    rng = random.Random(9)
    start = time.perf_counter()
    broken = []
    for i in range(100):
        n = rng.randint(4, 10)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        g = Graph(n, pairs[: rng.randint(1, min(20, len(pairs)))])
        am = max_antimatching(g)[0]
        chi = strong_chromatic_index(g).value
        if not sigma(g) <= am <= chi:
            broken.append(f"graph {i}: sigma={sigma(g)} am={am} chi_s={chi}")
    secs = time.perf_counter() - start
    record(9, "duality chain", not broken, f"sigma <= am <= chi_s on 100/100 graphs in {secs:.1f}s; broken: {broken or 'none'}")
