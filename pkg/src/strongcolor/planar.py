"""Coloring sparse high-girth graphs with sigma colors.

The driver shrinks the graph until a piece is small or a tree:

* components are colored separately;
* trees are colored directly;
* a vertex whose other neighbors are all leaves is split off at its cut edge;
* small graphs go to the exact solver;
* otherwise a long thread (an induced path of degree-2 vertices once leaves
  are ignored) is cut out.  The rest of the graph is colored recursively, the
  caterpillar around the thread is colored against the boundary that fixes,
  and the two colorings are glued.
"""

from __future__ import annotations

import logging
import sys
from collections import Counter, deque
from dataclasses import dataclass

from .caterpillar import (
    Caterpillar,
    CatColoring,
    PrePalette,
    ell_min,
    solve_precolored,
)
from .coloring import EdgeColoring
from .exact import DEFAULT_CONFIG, Aborted, Feasible, SearchConfig, colorable_with
from .graph import (
    Graph,
    Mutation,
    components,
    delete_vertices,
    edge_subgraph,
    girth,
    is_forest,
    sigma,
)

log = logging.getLogger(__name__)

FALLBACK_EDGES = 18


class ColoringFailure(RuntimeError):
    """A driver step could not proceed; ``step`` is one of peel, thread, cat, glue, exact."""

    def __init__(self, step: str, reason: str):
        super().__init__(f"FAIL step={step} reason={reason}")
        self.step = step
        self.reason = reason


def girth_threshold(s: int) -> int:
    """Girth that guarantees a long enough thread at the given sigma."""
    return 5 * ell_min(s) + 1


# -- leaves and threads ------------------------------------------------------------

def peel_leaves(g: Graph) -> tuple[Mutation, dict[int, list[int]]]:
    """Remove every degree-1 vertex once; also return each vertex's leaves in ``g``."""
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    leaf_map: dict[int, list[int]] = {}
    for v in leaves:
        leaf_map.setdefault(g.adj[v][0], []).append(v)
    return delete_vertices(g, leaves), leaf_map


@dataclass(frozen=True)
class Thread:
    """Path x0, x1, ..., x(l+1); the interior x1..xl has degree 2 in the host."""

    path: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 2


def _is_induced_path(h: Graph, path: list[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    pos = {v: i for i, v in enumerate(path)}
    for i, v in enumerate(path):
        for w in h.adj[v]:
            j = pos.get(w)
            if j is not None and abs(i - j) != 1:
                return False
    return all(h.has_edge(a, b) for a, b in zip(path, path[1:]))


def _runs(h: Graph) -> list[list[int]]:
    """Maximal paths of degree-2 vertices, each with its two outside neighbors attached.

    A run that closes into a cycle of degree-2 vertices is returned once, as
    the cycle opened at its smallest vertex.
    """
    seen = set()
    out = []
    for v in range(h.n):
        if h.degree(v) != 2 or v in seen:
            continue
        run = deque([v])
        seen.add(v)
        closed = False
        for side in (0, 1):
            prev, cur = v, h.adj[v][side]
            while h.degree(cur) == 2 and cur not in seen:
                seen.add(cur)
                if side:
                    run.append(cur)
                else:
                    run.appendleft(cur)
                prev, cur = cur, (h.adj[cur][0] if h.adj[cur][1] == prev else h.adj[cur][1])
            if cur == v or (h.degree(cur) == 2 and cur in run):
                closed = True
                break
            if side:
                run.append(cur)
            else:
                run.appendleft(cur)
        if closed:
            cyc = _cycle_from(h, min(run))
            out.append(cyc)
        else:
            out.append(list(run))
    return out


def _cycle_from(h: Graph, start: int) -> list[int]:
    path = [start]
    prev, cur = start, h.adj[start][0]
    while cur != start:
        path.append(cur)
        prev, cur = cur, (h.adj[cur][0] if h.adj[cur][1] == prev else h.adj[cur][1])
    return path


def find_thread(h: Graph, ell: int) -> Thread | None:
    """An induced path with ``ell`` interior vertices of degree 2, or None.

    Runs are scanned by their smallest vertex; within a run the first window
    that is induced wins.  A cycle made only of degree-2 vertices needs at
    least ell + 3 vertices so that the two ends are distinct and non-adjacent.
    """
    if ell < 1:
        raise ValueError("thread length must be positive")
    runs = sorted(_runs(h), key=min)
    for run in runs:
        cyclic = all(h.degree(v) == 2 for v in run) and h.has_edge(run[0], run[-1]) and len(run) > 2
        if cyclic:
            if len(run) < ell + 3:
                continue
            candidates = [run[: ell + 2]]
        else:
            if run[0] > run[-1]:
                run = run[::-1]
            candidates = [run[i : i + ell + 2] for i in range(len(run) - ell - 1)]
        for path in candidates:
            inner = path[1:-1]
            if all(h.degree(v) == 2 for v in inner) and _is_induced_path(h, path):
                return Thread(tuple(path))
    return None


# -- trees and cut edges ------------------------------------------------------------

def color_tree(t: Graph, kappa: int) -> EdgeColoring:
    """Strong coloring of a tree with ``kappa >= sigma`` colors.

    Top-down from the smallest non-isolated vertex: the edges from a vertex
    to its children take the lowest colors missing from the edges at its
    parent, which is exactly what one cut-edge split at a time produces.
    """
    if not is_forest(t):
        raise ValueError("input is not a tree")
    if t.edge_count == 0:
        return EdgeColoring({}, kappa)
    s = sigma(t)
    if kappa < s:
        raise ValueError(f"kappa = {kappa} is below sigma = {s}")
    color: dict[int, int] = {}
    root = next(v for v in range(t.n) if t.degree(v) > 0)
    for i, e in enumerate(t.inc[root]):
        color[e] = i
    queue = deque((t.other(e, root), root) for e in t.inc[root])
    while queue:
        v, parent = queue.popleft()
        blocked = {color[e] for e in t.inc[parent]}
        todo = [e for e in t.inc[v] if e not in color]
        free = (c for c in range(kappa) if c not in blocked)
        for e in todo:
            color[e] = next(free)
            queue.append((t.other(e, v), v))
    if len(color) != t.edge_count:
        raise ValueError("input is not a tree")
    return EdgeColoring(color, kappa)


def _side(g: Graph, start: int, cut: int) -> list[int]:
    """Edge ids reachable from ``start`` without crossing edge ``cut``."""
    seen = {start}
    edges = set()
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for e in g.inc[u]:
            if e == cut:
                continue
            edges.add(e)
            w = g.other(e, u)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(edges)


def color_via_cut(g: Graph, cut: int, kappa: int, colorer) -> EdgeColoring:
    """Color both sides of a cut edge separately, then align the second side's colors.

    The second side is permuted so the cut edge gets the same color on both
    sides and the colors next to the cut on the two sides are disjoint.
    """
    x1, x2 = g.edges[cut]
    if cut in _side(g, x1, cut) or set(_side(g, x1, cut)) & set(_side(g, x2, cut)):
        raise ValueError(f"edge {g.edges[cut]} is not a cut edge")
    if g.degree(x1) + g.degree(x2) - 1 > kappa:
        raise ValueError("kappa is below sigma at the cut edge")
    parts = []
    for root in (x1, x2):
        sub = edge_subgraph(g, _side(g, root, cut) + [cut])
        col = colorer(sub.graph, kappa)
        back = {new: old for old, new in sub.edge_map.items()}
        parts.append({back[e]: c for e, c in col.colors.items()})
    f1, f2 = parts
    s1 = {f1[e] for e in g.inc[x1] if e != cut}
    s2 = [f2[e] for e in g.inc[x2] if e != cut]
    perm = {f2[cut]: f1[cut]}
    spare = (c for c in range(kappa) if c not in s1 and c != f1[cut])
    for c in sorted(s2):
        perm[c] = next(spare)
    rest_src = [c for c in range(kappa) if c not in perm]
    rest_dst = [c for c in range(kappa) if c not in perm.values()]
    perm.update(zip(rest_src, rest_dst))
    out = dict(f1)
    out.update({e: perm[c] for e, c in f2.items()})
    return EdgeColoring(out, kappa)


def _hanging_vertex(g: Graph) -> tuple[int, int] | None:
    """(vertex, cut edge) for a vertex of degree >= 2 whose neighbors are leaves but one."""
    for v in range(g.n):
        d = g.degree(v)
        if d < 2:
            continue
        inner = [e for e in g.inc[v] if g.degree(g.other(e, v)) > 1]
        if len(inner) == 1:
            return v, inner[0]
    return None


# -- decomposition along a thread ---------------------------------------------------

@dataclass
class Decomposition:
    """A thread x0..x(l+1) in G, the caterpillar around x1..xl, and the reduced graph G'.

    ``cat_edges[i]`` lists the G edge ids at x_(i+1) in caterpillar order:
    the spine edge toward x_i, the spine edge toward x_(i+2), then pendants.
    """

    graph: Graph
    thread: Thread
    cat: Caterpillar
    spine_edges: list[int]
    pendant_edges: list[list[int]]
    reduced: Mutation

    @property
    def overlap(self) -> set[int]:
        """G edges present both in G' and in the caterpillar."""
        return set(self.reduced.edge_map) & (set(self.spine_edges).union(*self.pendant_edges))


def extract(g: Graph, thread: Thread) -> Decomposition:
    """Split G along a thread given in G's vertex ids."""
    path = thread.path
    ell = thread.length
    if ell < 5:
        raise ValueError(f"thread interior {ell} is too short to split (needs >= 5)")
    if len(set(path)) != len(path):
        raise ValueError("thread repeats a vertex")
    try:
        spine = [g.edge_id(a, b) for a, b in zip(path, path[1:])]
    except Exception:
        raise ValueError("thread is not a path of G") from None
    spine_set = set(spine)
    pendants = []
    claimed = set(path)
    for i in range(1, ell + 1):
        v = path[i]
        pend = [e for e in g.inc[v] if e not in spine_set]
        ends = [g.other(e, v) for e in pend]
        if claimed & set(ends):
            raise ValueError(f"the neighborhood of thread vertex {v} is not a caterpillar")
        if 1 < i < ell and any(g.degree(w) != 1 for w in ends):
            raise ValueError(f"interior thread vertex {v} has a non-leaf side neighbor")
        claimed.update(ends)
        pendants.append(pend)
    cat = Caterpillar(tuple(g.degree(v) for v in path[1:-1]))
    doomed = set(path[3 : ell - 1])
    for i in range(2, ell):
        doomed.update(g.other(e, path[i]) for e in pendants[i - 1])
    return Decomposition(g, thread, cat, spine, pendants, delete_vertices(g, doomed))


def boundary_of(dec: Decomposition, reduced_coloring: EdgeColoring, kappa: int) -> PrePalette:
    """The caterpillar's boundary instance as fixed by a coloring of G'."""
    emap = dec.reduced.edge_map
    ell = dec.thread.length
    first_edges = [dec.spine_edges[0], dec.spine_edges[1], *dec.pendant_edges[0]]
    last_edges = [dec.spine_edges[ell], dec.spine_edges[ell - 1], *dec.pendant_edges[-1]]
    c = reduced_coloring.colors
    return PrePalette(
        frozenset(range(kappa)),
        c[emap[dec.spine_edges[0]]],
        frozenset(c[emap[e]] for e in first_edges),
        frozenset(c[emap[e]] for e in last_edges),
        c[emap[dec.spine_edges[ell]]],
    )


def glue(dec: Decomposition, reduced_coloring: EdgeColoring, cat_coloring: CatColoring) -> EdgeColoring:
    """Combine a coloring of G' with a caterpillar coloring into one of G.

    The two agree set-wise at x1 and xl.  In G' the edges at x1 other than
    x0x1 all end in leaves (x2 lost its other edges), so G' colors may be
    swapped among them until x1x2 carries the caterpillar's color; the same
    at xl.  Afterwards both colorings agree edge by edge on the overlap.
    """
    ell = dec.thread.length
    emap = dec.reduced.edge_map
    colors = {old: reduced_coloring.colors[new] for old, new in emap.items()}
    ends = (
        (dec.spine_edges[0], dec.spine_edges[1], dec.pendant_edges[0], 1),
        (dec.spine_edges[ell], dec.spine_edges[ell - 1], dec.pendant_edges[-1], ell),
    )
    for outer, inner, pend, i in ends:
        want_outer = cat_coloring.alphas[0] if i == 1 else cat_coloring.alphas[ell]
        want_inner = cat_coloring.alphas[1] if i == 1 else cat_coloring.alphas[ell - 1]
        if colors[outer] != want_outer:
            raise ColoringFailure("glue", f"end edge {dec.graph.edges[outer]} has {colors[outer]}, caterpillar wants {want_outer}")
        group = [inner, *pend]
        have = sorted(colors[e] for e in group)
        need = sorted(cat_coloring.edge_set(i) - {want_outer})
        if have != need:
            raise ColoringFailure("glue", f"colors at thread vertex {dec.thread.path[i]} differ: {have} vs {need}")
        colors[inner] = want_inner
        for e, c in zip(pend, sorted(set(need) - {want_inner})):
            colors[e] = c
    for i in range(2, ell):
        colors.setdefault(dec.spine_edges[i - 1], cat_coloring.alphas[i - 1])
        colors.setdefault(dec.spine_edges[i], cat_coloring.alphas[i])
        for e, c in zip(dec.pendant_edges[i - 1], sorted(cat_coloring.hats[i - 1])):
            colors[e] = c
    for i, e in enumerate(dec.spine_edges):
        if colors[e] != cat_coloring.alphas[i]:
            raise ColoringFailure("glue", f"spine edge {dec.graph.edges[e]} disagrees after gluing")
    return EdgeColoring(colors, reduced_coloring.kappa)


# -- driver ---------------------------------------------------------------------------

def _thread_lengths(kappa: int) -> list[int]:
    out = [kappa + 3]
    if kappa >= 5 and ell_min(kappa) not in out:
        out.append(ell_min(kappa))
    return out


def color_graph(
    g: Graph,
    kappa: int,
    cfg: SearchConfig = DEFAULT_CONFIG,
    fallback_edges: int = FALLBACK_EDGES,
    trace: Counter | None = None,
) -> EdgeColoring:
    """Strong ``kappa``-coloring of ``g`` or ColoringFailure naming the step that failed.

    ``trace`` (if given) counts the routes taken.
    """
    trace = trace if trace is not None else Counter()
    if g.edge_count and kappa < sigma(g):
        raise ColoringFailure("exact", f"kappa={kappa} is below sigma={sigma(g)}")
    limit = max(sys.getrecursionlimit(), 10_000)
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    return _color(g, kappa, cfg, fallback_edges, trace)


def _color(g: Graph, kappa: int, cfg: SearchConfig, small: int, trace: Counter) -> EdgeColoring:
    if g.edge_count == 0:
        return EdgeColoring({}, kappa)
    comps = [c for c in components(g) if len(c) > 1]
    if len(comps) > 1:
        trace["components"] += 1
        out: dict[int, int] = {}
        for comp in comps:
            sub = edge_subgraph(g, [e for v in comp for e in g.inc[v]])
            col = _color(sub.graph, kappa, cfg, small, trace)
            back = {new: old for old, new in sub.edge_map.items()}
            out.update({back[e]: c for e, c in col.colors.items()})
        return EdgeColoring(out, kappa)
    if g.edge_count == len(comps[0]) - 1:
        trace["tree"] += 1
        return color_tree(g, kappa)
    hanging = _hanging_vertex(g)
    if hanging is not None:
        trace["cut"] += 1
        return color_via_cut(g, hanging[1], kappa, lambda h, k: _color(h, k, cfg, small, trace))
    if g.edge_count <= small:
        trace["exact"] += 1
        out = colorable_with(g, kappa, None, cfg)
        if isinstance(out, Feasible):
            return out.coloring
        kind = "aborted" if isinstance(out, Aborted) else "unsat"
        raise ColoringFailure("exact", f"{kind} kappa={kappa} nodes={out.nodes} m={g.edge_count}")
    return _color_by_thread(g, kappa, cfg, small, trace)


def _color_by_thread(g: Graph, kappa: int, cfg: SearchConfig, small: int, trace: Counter) -> EdgeColoring:
    peeled, _ = peel_leaves(g)
    h = peeled.graph
    if h.edge_count == 0:
        raise ColoringFailure("peel", "nothing left after removing leaves")
    to_g = {new: old for old, new in peeled.vertex_map.items()}
    thread = None
    for ell in _thread_lengths(kappa):
        found = find_thread(h, ell)
        if found is not None:
            thread = Thread(tuple(to_g[v] for v in found.path))
            break
    if thread is None:
        g_girth = girth(g)
        raise ColoringFailure(
            "thread",
            f"no thread of length {_thread_lengths(kappa)} (girth={g_girth} sigma={sigma(g)} "
            f"delta={g.max_degree()} m={g.edge_count})",
        )
    dec = extract(g, thread)
    trace["thread"] += 1
    reduced = _color(dec.reduced.graph, kappa, cfg, small, trace)
    pre = boundary_of(dec, reduced, kappa)
    res = solve_precolored(dec.cat, pre, cfg)
    trace["cat-" + res.route + ("-lifted" if res.lifted else "")] += 1
    if res.coloring is None:
        state = "aborted" if res.aborted else "infeasible"
        raise ColoringFailure("cat", f"{state} {dec.cat} {pre.spec()}")
    return glue(dec, reduced, res.coloring)

