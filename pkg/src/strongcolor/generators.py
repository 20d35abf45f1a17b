"""Instance factories: cycle families, jellyfish, caterpillars, trees, subdivided graphs."""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .caterpillar import Caterpillar, as_graph
from .graph import Graph, GraphError, girth, sigma
from .planar import girth_threshold


def gen_counterexample(n: int, d: int) -> Graph:
    """Cycle x1..x(3n+1) with d-2 leaves on every x(3i); sigma = d+1 while Delta = d."""
    if n < 1 or d < 2:
        raise ValueError(f"need n >= 1 and d >= 2, got n={n} d={d}")
    size = 3 * n + 1
    pairs = [(i, (i + 1) % size) for i in range(size)]
    nxt = size
    for i in range(1, n + 1):
        hub = 3 * i - 1
        for _ in range(d - 2):
            pairs.append((hub, nxt))
            nxt += 1
    return Graph(nxt, pairs)


@dataclass(frozen=True)
class JellyfishSpec:
    """Cycle v1..vn where v_i carries pendants[i-1] leaves."""

    n: int
    pendants: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pendants", tuple(self.pendants))
        if self.n < 3:
            raise ValueError("a jellyfish needs a cycle of length >= 3")
        if len(self.pendants) != self.n or min(self.pendants) < 0:
            raise ValueError(f"need {self.n} non-negative pendant counts")

    @classmethod
    def parse(cls, spec: str) -> JellyfishSpec:
        """``n:p1,...,pn``."""
        head, _, tail = spec.partition(":")
        counts = tuple(int(x) for x in tail.split(",")) if tail.strip() else ()
        return cls(int(head), counts)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p + 2 for p in self.pendants)

    @property
    def edge_count(self) -> int:
        return self.n + sum(self.pendants)

    @property
    def sigma(self) -> int:
        d = self.degrees
        return max(d[i] + d[(i + 1) % self.n] - 1 for i in range(self.n))


def gen_jellyfish(spec: JellyfishSpec) -> Graph:
    n = spec.n
    pairs = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for i, p in enumerate(spec.pendants):
        for _ in range(p):
            pairs.append((i, nxt))
            nxt += 1
    return Graph(nxt, pairs)


def _rotations(seq: tuple[int, ...]):
    for s in (seq, seq[::-1]):
        for r in range(len(s)):
            yield s[r:] + s[:r]


def jellyfish_index(spec: JellyfishSpec) -> int:
    """Closed-form strong chromatic index of a jellyfish with sigma >= 4."""
    n, m, s = spec.n, spec.edge_count, spec.sigma
    deg = spec.degrees
    if s < 4:
        raise ValueError(f"the closed form needs sigma >= 4, got {s}")
    if n == 3:
        return m
    if n == 4:
        return s + 1
    regular = len(set(deg)) == 1
    ratio = math.ceil(m / (n // 2))
    if n % 2 == 1 and ((regular and (n, deg[0]) != (7, 3)) or ratio >= s + 1):
        return ratio
    if regular and (n, deg[0]) == (7, 3):
        return s + 1
    if n % 3 != 0:
        # positions i = 1, 4, 7, ..., 3*floor(n/3) - 2 (1-based) of some rotation or reflection
        spots = range(0, 3 * (n // 3) - 2, 3)
        if any(all(rot[i] == s - 1 for i in spots) for rot in _rotations(deg)):
            return s + 1
    if (n, s) == (10, 4):
        if all(deg[i] == 3 for i in range(0, n, 2)) or all(deg[i] == 3 for i in range(1, n, 2)):
            return s + 1
    return s


def gen_caterpillar(degrees: Sequence[int]) -> Graph:
    return as_graph(Caterpillar(tuple(degrees))).graph


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    """Decode a Pruefer sequence over vertices 0..len(seq)+1."""
    n = len(seq) + 2
    if any(not 0 <= x < n for x in seq):
        raise ValueError(f"Pruefer entries must lie in 0..{n - 1}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    pairs = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        pairs.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    pairs.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, pairs)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree on n vertices, deterministic per seed."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph(1, [])
    rng = random.Random(seed)
    return tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])


def cube() -> Graph:
    pairs = [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)]
    return Graph(8, pairs)


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def named_graph(name: str) -> Graph:
    """``cube``, ``petersen``, ``K<n>`` or ``C<n>``."""
    if name == "cube":
        return cube()
    if name == "petersen":
        return petersen()
    if name[:1] in ("K", "C") and name[1:].isdigit():
        n = int(name[1:])
        return complete(n) if name[0] == "K" else cycle(n)
    raise ValueError(f"unknown graph name {name!r}")


def gen_high_girth_instance(base: Graph, k: int, sigma_target: int) -> Graph:
    """Subdivide every edge of ``base`` into k edges, then add leaves to reach sigma_target.

    Leaves go on two adjacent middle vertices of the first subdivided edge,
    with degrees sigma_target - 2 and 3 (for sigma_target >= 5), so that
    exactly that edge reaches sigma_target while Delta stays sigma_target - 2.
    """
    if base.edge_count == 0:
        raise ValueError("base graph has no edges")
    if k < 3:
        raise ValueError("k must be >= 3 to leave two adjacent inner vertices")
    base_delta = base.max_degree()
    if sigma_target < base_delta + 2:
        raise ValueError(f"sigma_target {sigma_target} is below Delta(base) + 2 = {base_delta + 2}")
    if sigma_target < 3:
        raise ValueError("sigma_target must be >= 3")
    g0 = girth(base)
    need = girth_threshold(max(sigma_target, 5))
    if g0 != math.inf and k * g0 < need:
        raise ValueError(f"girth {k * g0} is below {need}; use k >= {math.ceil(need / g0)}")
    n = base.n
    pairs: list[tuple[int, int]] = []
    first_path: list[int] = []
    for e, (u, v) in enumerate(base.edges):
        chain = [u, *range(n, n + k - 1), v]
        n += k - 1
        pairs.extend(zip(chain, chain[1:]))
        if e == 0:
            first_path = chain
    a = max(sigma_target - 2, (sigma_target + 2) // 2)
    b = sigma_target + 1 - a
    j = k // 2 - (1 if k % 2 == 0 else 0)
    j = min(max(j, 1), k - 2)
    for hub, target in ((first_path[j], a), (first_path[j + 1], b)):
        for _ in range(target - 2):
            pairs.append((hub, n))
            n += 1
    g = Graph(n, pairs)
    if sigma(g) != sigma_target:
        raise GraphError(f"construction reached sigma {sigma(g)} instead of {sigma_target}")
    return g
