"""Exact strong edge-coloring by backtracking over the conflict graph.

The search colors one edge at a time, always picking the uncolored edge with
the fewest remaining candidate colors (ties: larger conflict degree, then
smaller edge id).  Colors are tried lowest first, and of the colors that
appear nowhere yet only the lowest one is tried, since unused colors are
interchangeable.  Every assignment removes its color from the candidates of
all conflicting edges, and a branch dies as soon as some edge runs out.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import NamedTuple, Union

from .coloring import (
    ConflictGraph,
    EdgeColoring,
    conflict_graph,
    greedy_clique,
    max_clique,
    max_induced_matching,
)
from .graph import Graph, sigma

DEFAULT_NODE_LIMIT = 50_000_000


@dataclass(frozen=True)
class SearchConfig:
    ordering: str = "dsatur"
    node_limit: int = DEFAULT_NODE_LIMIT
    symmetry_break: bool = True

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.ordering not in ("dsatur", "input"):
            raise ValueError(f"unknown ordering {self.ordering!r}")

    @classmethod
    def from_env(cls, **kwargs) -> SearchConfig:
        """Config whose node limit honors the SEC_NODE_LIMIT environment variable."""
        raw = os.environ.get("SEC_NODE_LIMIT")
        if raw:
            kwargs.setdefault("node_limit", int(raw))
        return cls(**kwargs)


DEFAULT_CONFIG = SearchConfig()


@dataclass(frozen=True)
class Feasible:
    coloring: EdgeColoring
    nodes: int


@dataclass(frozen=True)
class Infeasible:
    """Search space exhausted without a coloring.

    ``input_error`` holds two pre-assigned edges that already conflict.
    """

    nodes: int
    complete: bool = True
    input_error: tuple[int, int] | None = None


@dataclass(frozen=True)
class Aborted:
    nodes: int


SolveOutcome = Union[Feasible, Infeasible, Aborted]


class _Abort(Exception):
    pass


def colorable_with(
    g: Graph,
    kappa: int,
    pre: EdgeColoring | dict[int, int] | None = None,
    cfg: SearchConfig = DEFAULT_CONFIG,
    conflicts: ConflictGraph | None = None,
) -> SolveOutcome:
    """Decide whether ``g`` has a strong ``kappa``-edge-coloring extending ``pre``."""
    m = g.edge_count
    cg = conflicts if conflicts is not None else conflict_graph(g)
    nbrs = cg.neighbors
    fixed = dict(pre.colors if isinstance(pre, EdgeColoring) else (pre or {}))
    for e, c in fixed.items():
        if not 0 <= c < kappa:
            raise ValueError(f"pre-assigned color {c} on edge {e} is outside 0..{kappa - 1}")
    for e, c in sorted(fixed.items()):
        for f in nbrs[e]:
            if f > e and fixed.get(f) == c:
                return Infeasible(0, True, (e, f))

    full = (1 << kappa) - 1
    dom = [full] * m
    color = [-1] * m
    used = 0
    for e, c in fixed.items():
        color[e] = c
        used |= 1 << c
        for f in nbrs[e]:
            dom[f] &= ~(1 << c)
    free = [e for e in range(m) if color[e] < 0]
    if any(dom[e] == 0 for e in free):
        return Infeasible(0)

    degree = [len(x) for x in nbrs]
    limit = cfg.node_limit
    by_input = cfg.ordering == "input"
    sym = cfg.symmetry_break
    nodes = 0

    def pick() -> int:
        best = -1
        best_key = None
        for e in range(m):
            if color[e] >= 0:
                continue
            if by_input:
                return e
            key = (dom[e].bit_count(), -degree[e])
            if best_key is None or key < best_key:
                best, best_key = e, key
        return best

    def search(remaining: int, used: int) -> bool:
        nonlocal nodes
        if remaining == 0:
            return True
        e = pick()
        cand = dom[e]
        if sym:
            fresh = cand & ~used
            cand = (cand & used) | (fresh & -fresh)
        while cand:
            low = cand & -cand
            cand ^= low
            nodes += 1
            if nodes > limit:
                raise _Abort
            c = low.bit_length() - 1
            color[e] = c
            touched = []
            ok = True
            for f in nbrs[e]:
                if color[f] < 0 and dom[f] & low:
                    dom[f] ^= low
                    touched.append(f)
                    if not dom[f]:
                        ok = False
                        break
            if ok and search(remaining - 1, used | low):
                return True
            for f in touched:
                dom[f] |= low
            color[e] = -1
        return False

    try:
        found = search(len(free), used)
    except _Abort:
        for e in free:
            color[e] = -1
        return Aborted(nodes)
    if found:
        return Feasible(EdgeColoring(dict(enumerate(color)), kappa), nodes)
    return Infeasible(nodes)


class SearchAborted(RuntimeError):
    """The node limit was hit; ``lower``/``upper`` bracket the true value."""

    def __init__(self, lower: int, upper: int, nodes: int):
        super().__init__(f"search aborted after {nodes} nodes; chi_s in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class ChromaticResult(NamedTuple):
    value: int
    coloring: EdgeColoring
    nodes: int
    lower_bound: int


def greedy_coloring(g: Graph, conflicts: ConflictGraph | None = None) -> EdgeColoring:
    """First-fit coloring in saturation order; an upper bound for chi_s."""
    cg = conflicts if conflicts is not None else conflict_graph(g)
    m = g.edge_count
    color = [-1] * m
    seen = [0] * m
    for _ in range(m):
        e = max(
            (x for x in range(m) if color[x] < 0),
            key=lambda x: (seen[x].bit_count(), cg.degree(x), -x),
        )
        taken = seen[e]
        c = 0
        while taken >> c & 1:
            c += 1
        color[e] = c
        for f in cg.neighbors[e]:
            seen[f] |= 1 << c
    return EdgeColoring(dict(enumerate(color)), max(color, default=-1) + 1)


def lower_bound(g: Graph, conflicts: ConflictGraph | None = None, budget: int = 64) -> int:
    """max(sigma, antimatching size, ceil(m / induced matching number)).

    The clique and induced-matching terms are exact up to ``budget`` edges;
    above it only a greedy clique is used.
    """
    m = g.edge_count
    if m == 0:
        return 0
    cg = conflicts if conflicts is not None else conflict_graph(g)
    bound = sigma(g)
    if m <= budget:
        bound = max(bound, len(max_clique(cg.masks)))
        bound = max(bound, math.ceil(m / len(max_induced_matching(g, budget))))
    else:
        bound = max(bound, len(greedy_clique(cg.masks)))
    return bound


def strong_chromatic_index(g: Graph, cfg: SearchConfig = DEFAULT_CONFIG) -> ChromaticResult:
    """Exact chi_s: try kappa upward from a lower bound until a coloring exists."""
    if g.edge_count == 0:
        return ChromaticResult(0, EdgeColoring({}, 0), 0, 0)
    cg = conflict_graph(g)
    low = lower_bound(g, cg)
    upper = greedy_coloring(g, cg).kappa
    total = 0
    for kappa in range(low, upper + 1):
        out = colorable_with(g, kappa, None, cfg, cg)
        total += out.nodes
        if isinstance(out, Feasible):
            return ChromaticResult(kappa, out.coloring, total, low)
        if isinstance(out, Aborted):
            raise SearchAborted(kappa, upper, total)
    raise AssertionError("greedy upper bound was not reached")
