"""Strong edge-colorings: verification, the conflict graph, antimatchings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, conflict_pairs


@dataclass(frozen=True)
class EdgeColoring:
    """Map from edge id to a 0-based color below ``kappa``; may be partial."""

    colors: Mapping[int, int]
    kappa: int

    def __post_init__(self):
        object.__setattr__(self, "colors", dict(self.colors))
        if self.kappa < 0:
            raise ValueError(f"kappa must be non-negative, got {self.kappa}")
        for e, c in self.colors.items():
            if not 0 <= c < self.kappa:
                raise ValueError(f"edge {e} has color {c} outside 0..{self.kappa - 1}")

    @classmethod
    def from_list(cls, colors: Sequence[int], kappa: int | None = None) -> EdgeColoring:
        if kappa is None:
            kappa = max(colors, default=-1) + 1
        return cls(dict(enumerate(colors)), kappa)

    def is_total(self, g: Graph) -> bool:
        return all(e in self.colors for e in range(g.edge_count))

    def uncolored(self, g: Graph) -> list[int]:
        return [e for e in range(g.edge_count) if e not in self.colors]

    def as_list(self, g: Graph) -> list[int]:
        return [self.colors[e] for e in range(g.edge_count)]

    def used(self) -> set[int]:
        return set(self.colors.values())

    def __getitem__(self, e: int) -> int:
        return self.colors[e]


class IncompleteColoring(ValueError):
    def __init__(self, missing: list[int]):
        super().__init__(f"{len(missing)} uncolored edge(s): {missing[:10]}")
        self.missing = missing


@dataclass(frozen=True)
class Violation:
    """Two conflicting edges sharing ``color``; ``witness`` is the vertex walk linking them."""

    e: int
    f: int
    color: int
    witness: tuple[int, ...]


class ConflictGraph:
    """Square of the line graph: one node per edge id, adjacent iff the edges conflict."""

    def __init__(self, g: Graph):
        self.neighbors: list[tuple[int, ...]] = [
            tuple(sorted(conflict_pairs(g, e))) for e in range(g.edge_count)
        ]
        self.masks: list[int] = []
        for nbrs in self.neighbors:
            m = 0
            for f in nbrs:
                m |= 1 << f
            self.masks.append(m)

    def __len__(self) -> int:
        return len(self.neighbors)

    def adjacent(self, e: int, f: int) -> bool:
        return bool(self.masks[e] >> f & 1)

    def degree(self, e: int) -> int:
        return len(self.neighbors[e])


def conflict_graph(g: Graph) -> ConflictGraph:
    return ConflictGraph(g)


def _witness(g: Graph, e: int, f: int) -> tuple[int, ...]:
    a, b = g.edges[e]
    c, d = g.edges[f]
    for s in (a, b):
        if s in (c, d):
            return (g.other(e, s), s, g.other(f, s))
    for x in (a, b):
        for y in (c, d):
            if g.has_edge(x, y):
                return (g.other(e, x), x, y, g.other(f, y))
    raise AssertionError(f"edges {e} and {f} do not conflict")


def verify(g: Graph, c: EdgeColoring) -> list[Violation]:
    """All pairs of conflicting edges with equal colors; empty means valid.

    Raises IncompleteColoring if some edge has no color.
    """
    missing = c.uncolored(g)
    if missing:
        raise IncompleteColoring(missing)
    out = []
    for e in range(g.edge_count):
        ce = c.colors[e]
        for f in sorted(conflict_pairs(g, e)):
            if f > e and c.colors[f] == ce:
                out.append(Violation(e, f, ce, _witness(g, e, f)))
    return out


def is_strong(g: Graph, c: EdgeColoring) -> bool:
    return not verify(g, c)


def relabel(c: EdgeColoring, perm: Sequence[int]) -> EdgeColoring:
    """Apply the color permutation ``perm`` (old color ``i`` becomes ``perm[i]``)."""
    if sorted(perm) != list(range(c.kappa)):
        raise ValueError(f"not a permutation of 0..{c.kappa - 1}: {list(perm)}")
    return EdgeColoring({e: perm[x] for e, x in c.colors.items()}, c.kappa)


# -- antimatchings (cliques of the conflict graph) ------------------------------

class BudgetExceeded(RuntimeError):
    pass


def _color_sort(masks: list[int], cand: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    k = 0
    rest = cand
    while rest:
        k += 1
        q = rest
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~masks[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(masks: list[int]) -> list[int]:
    """Exact maximum clique of a graph given as adjacency bitmasks.

    Branch and bound where the number of greedy color classes among the
    candidates bounds how much the current clique can still grow.
    """
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = _color_sort(masks, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            sub = cand & masks[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << len(masks)) - 1)
    return sorted(best)


def greedy_clique(masks: list[int]) -> list[int]:
    """A large clique found greedily from every start vertex; a lower bound only."""
    n = len(masks)
    degree = [bin(m).count("1") for m in masks]
    best: list[int] = []
    for s in range(n):
        clique = [s]
        cand = masks[s]
        while cand:
            pick = max(_bits(cand), key=lambda v: (bin(masks[v] & cand).count("1"), degree[v], -v))
            clique.append(pick)
            cand &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def max_antimatching(g: Graph, node_budget: int = 64) -> tuple[int, list[int]]:
    """Largest set of pairwise-conflicting edges, with the edge ids as witness."""
    if g.edge_count > node_budget:
        raise BudgetExceeded(
            f"{g.edge_count} edges exceed the antimatching budget of {node_budget}"
        )
    if g.edge_count == 0:
        return 0, []
    witness = max_clique(conflict_graph(g).masks)
    return len(witness), witness


def max_induced_matching(g: Graph, node_budget: int = 64) -> list[int]:
    """Largest set of pairwise non-conflicting edges (a maximum induced matching)."""
    if g.edge_count > node_budget:
        raise BudgetExceeded(
            f"{g.edge_count} edges exceed the induced-matching budget of {node_budget}"
        )
    m = g.edge_count
    full = (1 << m) - 1
    masks = conflict_graph(g).masks
    return max_clique([full & ~mk & ~(1 << e) for e, mk in enumerate(masks)])
