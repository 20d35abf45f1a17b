"""Undirected simple graphs over dense integer vertices.

Edges keep the position they were inserted at (their edge id), so colorings
indexed by edge id are reproducible from the same input.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, duplicates, bad ids)."""


class Graph:
    """Immutable undirected simple graph.

    ``edges[i]`` is the pair ``(u, v)`` with ``u < v`` for edge id ``i``;
    ``adj[v]`` is the sorted neighbor list of ``v`` and ``inc[v]`` the sorted
    ids of the edges incident with ``v``.
    """

    __slots__ = ("n", "edges", "adj", "inc", "_index")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        index: dict[tuple[int, int], int] = {}
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {(u, v)}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"duplicate edge {(u, v)}")
            index[key] = len(norm)
            norm.append(key)
        adj: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(norm):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(e)
            inc[v].append(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.inc = tuple(tuple(i) for i in inc)
        self._index = index

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"no edge {(u, v)}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(pairs: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
    """Build a graph from vertex pairs; ``n`` defaults to one past the largest id."""
    pairs = [(int(u), int(v)) for u, v in pairs]
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return Graph(n, pairs)


def sigma(g: Graph) -> int:
    """max over edges xy of deg(x) + deg(y) - 1."""
    if not g.edges:
        raise GraphError("sigma is undefined for an edgeless graph")
    deg = g.degrees()
    return max(deg[u] + deg[v] - 1 for u, v in g.edges)


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    BFS from every vertex; a non-tree edge (u, w) seen from root r closes a
    closed walk of length dist[u] + dist[w] + 1, and the minimum over all
    roots is exactly the girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def bridges(g: Graph) -> set[int]:
    """Edge ids whose removal disconnects their component (iterative low-link DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[int] = set()
    clock = 0
    for start in range(g.n):
        if disc[start] >= 0:
            continue
        disc[start] = low[start] = clock
        clock += 1
        # frames: (vertex, edge id used to enter it, position in inc list)
        stack = [(start, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            if pos < len(g.inc[v]):
                stack[-1] = (v, via, pos + 1)
                e = g.inc[v][pos]
                if e == via:
                    continue
                w = g.other(e, v)
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add(via)
    return out


def conflict_pairs(g: Graph, e: int) -> set[int]:
    """Edges at line-graph distance 1 or 2 from edge ``e``.

    An edge conflicts with ``e = uv`` iff it has an endpoint in the closed
    neighborhood of u or of v.
    """
    u, v = g.edges[e]
    near = {u, v, *g.adj[u], *g.adj[v]}
    out = {f for x in near for f in g.inc[x]}
    out.discard(e)
    return out


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.edge_count == g.n - 1 and len(components(g)) == 1


# -- mutations ---------------------------------------------------------------

class Mutation(NamedTuple):
    """A derived graph plus maps from surviving old ids to new ids."""

    graph: Graph
    edge_map: dict[int, int]
    vertex_map: dict[int, int]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"no vertex {v}")


def _check_edge(g: Graph, e: int) -> None:
    if not 0 <= e < g.edge_count:
        raise GraphError(f"no edge id {e}")


def attach_leaf(g: Graph, v: int) -> Mutation:
    _check_vertex(g, v)
    new = Graph(g.n + 1, [*g.edges, (v, g.n)])
    return Mutation(new, {e: e for e in range(g.edge_count)}, {x: x for x in range(g.n)})


def subdivide_edge(g: Graph, e: int, k: int) -> Mutation:
    """Insert ``k`` new vertices on edge ``e`` (a path of k+1 edges); the path edges go last."""
    _check_edge(g, e)
    if k < 0:
        raise GraphError(f"subdivision count must be >= 0, got {k}")
    u, v = g.edges[e]
    kept = [f for f in range(g.edge_count) if f != e]
    pairs = [g.edges[f] for f in kept]
    chain = [u, *range(g.n, g.n + k), v]
    pairs.extend(zip(chain, chain[1:]))
    new = Graph(g.n + k, pairs)
    return Mutation(new, {f: i for i, f in enumerate(kept)}, {x: x for x in range(g.n)})


def delete_vertices(g: Graph, doomed: Iterable[int]) -> Mutation:
    """Remove vertices (and their edges), renumbering survivors in order."""
    doomed = set(doomed)
    for v in doomed:
        _check_vertex(g, v)
    vmap: dict[int, int] = {}
    for v in range(g.n):
        if v not in doomed:
            vmap[v] = len(vmap)
    emap: dict[int, int] = {}
    pairs = []
    for e, (u, v) in enumerate(g.edges):
        if u in vmap and v in vmap:
            emap[e] = len(pairs)
            pairs.append((vmap[u], vmap[v]))
    return Mutation(Graph(len(vmap), pairs), emap, vmap)


def delete_edges(g: Graph, doomed: Iterable[int]) -> Mutation:
    doomed = set(doomed)
    for e in doomed:
        _check_edge(g, e)
    emap: dict[int, int] = {}
    pairs = []
    for e, p in enumerate(g.edges):
        if e not in doomed:
            emap[e] = len(pairs)
            pairs.append(p)
    return Mutation(Graph(g.n, pairs), emap, {x: x for x in range(g.n)})


def edge_subgraph(g: Graph, edge_ids: Iterable[int]) -> Mutation:
    """Subgraph spanned by the given edges (only their endpoints are kept).

    Vertices and edges are renumbered preserving their relative order.
    """
    chosen = sorted(set(edge_ids))
    for e in chosen:
        _check_edge(g, e)
    verts = sorted({x for e in chosen for x in g.edges[e]})
    vmap = {v: i for i, v in enumerate(verts)}
    pairs = [(vmap[g.edges[e][0]], vmap[g.edges[e][1]]) for e in chosen]
    return Mutation(Graph(len(verts), pairs), {e: i for i, e in enumerate(chosen)}, vmap)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Mutation:
    keep = set(vertices)
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])
