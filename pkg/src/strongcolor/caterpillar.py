"""Two-sided pre-colored strong edge-coloring of caterpillar trees.

A caterpillar ``Cat(d1, ..., dl)`` has spine ``x0, x1, ..., x(l+1)`` where
``x0`` and ``x(l+1)`` are leaves and ``xi`` has degree ``di``.  ``E_i`` is
the set of edges at ``xi``.  A boundary instance (``PrePalette``) fixes a
palette ``C``, the color sets of ``E_1`` and ``E_l`` and the colors of the
two end edges ``x0x1`` and ``xl x(l+1)``; the engine either extends it to a
strong coloring of the whole caterpillar or reports that none exists.

Inside the guaranteed range (sigma >= 5, sigma >= Delta + 2, l >= ell_min)
the coloring is built constructively: shrink the palette to sigma colors,
shorten the spine to ell_min, then either search the small base case or
peel one color class off the large vertices and recurse on a caterpillar
with sigma one smaller.  Everything else goes to the exact solver.

Colorings of a caterpillar are kept in spine form (``CatColoring``): the
color of every spine edge plus the set of colors on the pendant edges of
each spine vertex.  Pendant edges at one vertex are interchangeable, so the
set is all that matters.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, NamedTuple, Union

from .coloring import EdgeColoring
from .exact import DEFAULT_CONFIG, Aborted, Feasible, SearchConfig, colorable_with
from .graph import Graph

log = logging.getLogger(__name__)


class EngineInvariantError(AssertionError):
    """An internal invariant of the constructive engine failed."""


# -- shapes -------------------------------------------------------------------

def _seq_sigma(degrees: tuple[int, ...] | list[int]) -> int:
    best = max(degrees[0], degrees[-1])
    for a, b in zip(degrees, degrees[1:]):
        best = max(best, a + b - 1)
    return best


@dataclass(frozen=True)
class Caterpillar:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.degrees:
            raise ValueError("a caterpillar needs at least one spine vertex")
        if min(self.degrees) < 2:
            raise ValueError(f"spine degrees must be >= 2, got {self.degrees}")

    @classmethod
    def parse(cls, spec: str) -> Caterpillar:
        """Accept ``cat:3,4,3`` or ``Cat(3,4,3)``."""
        text = spec.strip()
        m = re.fullmatch(r"(?:cat:|Cat\()\s*([\d,\s]+?)\s*\)?", text)
        if not m:
            raise ValueError(f"bad caterpillar spec {spec!r}")
        return cls(tuple(int(x) for x in m.group(1).split(",")))

    @property
    def length(self) -> int:
        return len(self.degrees)

    @property
    def sigma(self) -> int:
        return _seq_sigma(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) - self.length + 1

    def degree(self, i: int) -> int:
        """Degree of spine vertex ``x_i`` (1-based; the two ends have degree 1)."""
        if i == 0 or i == self.length + 1:
            return 1
        return self.degrees[i - 1]

    def reversed(self) -> Caterpillar:
        return Caterpillar(self.degrees[::-1])

    def drop_last(self) -> Caterpillar:
        return Caterpillar(self.degrees[:-1])

    def is_nice(self) -> bool:
        s = self.sigma
        return s >= 5 and s >= self.max_degree + 2 and self.length >= ell_min(s)

    def spec(self) -> str:
        return "cat:" + ",".join(map(str, self.degrees))

    def __str__(self) -> str:
        return "Cat(" + ",".join(map(str, self.degrees)) + ")"


def _colors(text: str) -> frozenset[int]:
    return frozenset(int(x) - 1 for x in text.split(",") if x.strip())


@dataclass(frozen=True)
class PrePalette:
    """Boundary instance (C; alpha0, C1, Cl, alpha_l) with 0-based colors."""

    palette: frozenset[int]
    alpha0: int
    first: frozenset[int]
    last: frozenset[int]
    alpha_last: int

    def __post_init__(self):
        for name in ("palette", "first", "last"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @classmethod
    def parse(cls, spec: str) -> PrePalette:
        """``pal:kappa;a0;C1;Cl;al`` with 1-based colors, palette = 1..kappa."""
        text = spec.strip()
        if text.startswith("pal:"):
            text = text[4:]
        parts = text.split(";")
        if len(parts) != 5:
            raise ValueError(f"bad palette spec {spec!r}")
        kappa = int(parts[0])
        return cls(
            frozenset(range(kappa)),
            int(parts[1]) - 1,
            _colors(parts[2]),
            _colors(parts[3]),
            int(parts[4]) - 1,
        )

    @property
    def kappa(self) -> int:
        return len(self.palette)

    def validate(self, cat: Caterpillar) -> None:
        problems = []
        if not self.first <= self.palette or not self.last <= self.palette:
            problems.append("boundary sets must lie inside the palette")
        if len(self.first) != cat.degrees[0]:
            problems.append(f"|C1| = {len(self.first)} but d1 = {cat.degrees[0]}")
        if len(self.last) != cat.degrees[-1]:
            problems.append(f"|Cl| = {len(self.last)} but dl = {cat.degrees[-1]}")
        if self.alpha0 not in self.first:
            problems.append("alpha0 must lie in C1")
        if self.alpha_last not in self.last:
            problems.append("alpha_l must lie in Cl")
        if self.kappa < cat.sigma:
            problems.append(f"kappa = {self.kappa} < sigma = {cat.sigma}")
        if problems:
            raise ValueError(f"malformed boundary for {cat}: " + "; ".join(problems))

    def reversed(self) -> PrePalette:
        return PrePalette(self.palette, self.alpha_last, self.last, self.first, self.alpha0)

    def spec(self) -> str:
        """1-based spec string; only exact when the palette is 0..kappa-1."""
        def fmt(s):
            return ",".join(str(c + 1) for c in sorted(s))
        return f"pal:{self.kappa};{self.alpha0 + 1};{fmt(self.first)};{fmt(self.last)};{self.alpha_last + 1}"


@dataclass(frozen=True)
class CatColoring:
    """Spine form of a caterpillar coloring.

    ``alphas[i]`` colors the spine edge ``x_i x_(i+1)`` (i = 0..l);
    ``hats[i-1]`` is the set of pendant colors at ``x_i``.
    """

    alphas: tuple[int, ...]
    hats: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        object.__setattr__(self, "hats", tuple(frozenset(h) for h in self.hats))

    @property
    def length(self) -> int:
        return len(self.hats)

    def edge_set(self, i: int) -> frozenset[int]:
        """Colors on E_i (1-based spine index)."""
        return self.hats[i - 1] | {self.alphas[i - 1], self.alphas[i]}

    def problems(self, cat: Caterpillar) -> list[str]:
        out = []
        ell = cat.length
        if len(self.alphas) != ell + 1 or len(self.hats) != ell:
            return [f"shape mismatch for {cat}"]
        for i in range(1, ell + 1):
            d = cat.degrees[i - 1]
            if len(self.hats[i - 1]) != d - 2:
                out.append(f"x{i} has {len(self.hats[i - 1])} pendant colors, needs {d - 2}")
            if len(self.edge_set(i)) != d:
                out.append(f"E_{i} repeats a color")
        for i in range(1, ell):
            need = cat.degrees[i - 1] + cat.degrees[i] - 1
            if len(self.edge_set(i) | self.edge_set(i + 1)) != need:
                out.append(f"E_{i} and E_{i + 1} share a color besides x{i}x{i + 1}")
        return out

    def is_valid(self, cat: Caterpillar) -> bool:
        return not self.problems(cat)

    def meets(self, pre: PrePalette) -> bool:
        used = set(self.alphas).union(*self.hats)
        return (
            used <= pre.palette
            and self.alphas[0] == pre.alpha0
            and self.alphas[-1] == pre.alpha_last
            and self.edge_set(1) == pre.first
            and self.edge_set(self.length) == pre.last
        )

    def reversed(self) -> CatColoring:
        return CatColoring(self.alphas[::-1], self.hats[::-1])

    def row(self) -> str:
        """Table-style row with 1-based colors: ``a0 {..} a1 {..} ... al``."""
        parts = [str(self.alphas[0] + 1)]
        for i, hat in enumerate(self.hats):
            parts.append("{" + ",".join(str(c + 1) for c in sorted(hat)) + "}")
            parts.append(str(self.alphas[i + 1] + 1))
        return " ".join(parts)

    @classmethod
    def from_row(cls, row: str) -> CatColoring:
        """Inverse of ``row``; tolerates blanks inside braces."""
        tokens = re.findall(r"\{[^}]*\}|\d+", row)
        alphas = [int(t) - 1 for t in tokens[0::2]]
        hats = [_colors(t[1:-1]) for t in tokens[1::2]]
        if len(alphas) != len(hats) + 1 or any(t.startswith("{") for t in tokens[0::2]):
            raise ValueError(f"bad coloring row {row!r}")
        return cls(tuple(alphas), tuple(hats))


class CatGraph(NamedTuple):
    """A caterpillar realized as a Graph: spine edge ids and pendant edge ids."""

    graph: Graph
    spine: list[int]
    pendants: list[list[int]]


def as_graph(cat: Caterpillar) -> CatGraph:
    """Spine vertices are 0..l+1, leaves follow; spine edges come first."""
    ell = cat.length
    pairs = [(i, i + 1) for i in range(ell + 1)]
    spine = list(range(ell + 1))
    pendants: list[list[int]] = []
    nxt = ell + 2
    for i, d in enumerate(cat.degrees, 1):
        ids = []
        for _ in range(d - 2):
            ids.append(len(pairs))
            pairs.append((i, nxt))
            nxt += 1
        pendants.append(ids)
    return CatGraph(Graph(nxt, pairs), spine, pendants)


def to_edge_coloring(col: CatColoring, cg: CatGraph, kappa: int | None = None) -> EdgeColoring:
    colors = {e: col.alphas[i] for i, e in enumerate(cg.spine)}
    for ids, hat in zip(cg.pendants, col.hats):
        colors.update(zip(ids, sorted(hat)))
    if kappa is None:
        kappa = max(colors.values()) + 1
    return EdgeColoring(colors, kappa)


def from_edge_coloring(c: EdgeColoring, cg: CatGraph) -> CatColoring:
    alphas = tuple(c.colors[e] for e in cg.spine)
    hats = tuple(frozenset(c.colors[e] for e in ids) for ids in cg.pendants)
    return CatColoring(alphas, hats)


# -- parameters -----------------------------------------------------------------

def d_star(sigma: int) -> int:
    """ceil((sigma + 1) / 2): the degree threshold for sigma-large spine vertices."""
    if sigma < 1:
        raise ValueError("sigma must be positive")
    return (sigma + 2) // 2


def ell_min(sigma: int) -> int:
    """Shortest spine length for which every nice caterpillar is pre-colorable."""
    if sigma < 5:
        raise ValueError(f"ell_min is defined for sigma >= 5, got {sigma}")
    if sigma == 5:
        return 8
    if sigma <= 7:
        return 7
    return sigma


def large_set(cat: Caterpillar) -> frozenset[int]:
    """1-based indices of the thinned sigma-large spine vertices.

    Every vertex above d* is taken; in each maximal run of vertices equal to
    d* only the 1st, 3rd, 5th, ... are taken.
    """
    s = cat.sigma
    if s < 2:
        raise ValueError("large_set needs sigma >= 2")
    ds = d_star(s)
    d = cat.degrees
    chosen: set[int] = set()
    i = 0
    while i < len(d):
        if d[i] > ds:
            chosen.add(i + 1)
            i += 1
        elif d[i] == ds:
            j = i
            while j + 1 < len(d) and d[j + 1] == ds:
                j += 1
            chosen.update(range(i + 1, j + 2, 2))
            i = j + 1
        else:
            i += 1
    if any(k + 1 in chosen for k in chosen):
        raise EngineInvariantError(f"large set {sorted(chosen)} of {cat} is not independent")
    if not chosen:
        raise EngineInvariantError(f"large set of {cat} is empty")
    if s >= 5:
        reduced = [x - 1 if k in chosen else x for k, x in enumerate(d, 1)]
        if _seq_sigma(reduced) != s - 1:
            raise EngineInvariantError(f"decrementing {sorted(chosen)} in {cat} does not drop sigma by 1")
    return frozenset(chosen)


def derive_reduced(cat: Caterpillar, chosen: Iterable[int] | None = None) -> Caterpillar:
    """T': the caterpillar with one pendant removed at every large vertex."""
    chosen = large_set(cat) if chosen is None else frozenset(chosen)
    d = [x - 1 if k in chosen else x for k, x in enumerate(cat.degrees, 1)]
    if min(d) < 2:
        raise EngineInvariantError(f"reducing {cat} at {sorted(chosen)} leaves a degree below 2")
    reduced = Caterpillar(tuple(d))
    if cat.sigma >= 5 and reduced.sigma != cat.sigma - 1:
        raise EngineInvariantError(f"{cat} -> {reduced} does not drop sigma by exactly 1")
    return reduced


# -- reductions ----------------------------------------------------------------

@dataclass(frozen=True)
class KappaReduction:
    """Boundary over a smaller palette plus the recoloring that undoes it on E_l."""

    sub: PrePalette
    recolor: dict[int, int] = field(default_factory=dict)

    def apply(self, col: CatColoring) -> CatColoring:
        if not self.recolor:
            return col
        ell = col.length
        alphas = list(col.alphas)
        alphas[ell - 1] = self.recolor.get(alphas[ell - 1], alphas[ell - 1])
        hats = list(col.hats)
        hats[ell - 1] = frozenset(self.recolor.get(c, c) for c in hats[ell - 1])
        return CatColoring(tuple(alphas), tuple(hats))


def reduce_kappa(cat: Caterpillar, pre: PrePalette, target: int) -> KappaReduction:
    """Move a boundary instance onto a ``target``-color sub-palette.

    If C1 and Cl fit together, any sub-palette containing both works.
    Otherwise keep C1 and alpha_l, substitute the missing colors of Cl by
    colors from the sub-palette, and recolor those E_l edges afterwards with
    the dropped colors, which appear nowhere else.
    """
    if target < cat.sigma:
        raise ValueError(f"target palette {target} is below sigma = {cat.sigma}")
    if target > pre.kappa:
        raise ValueError(f"target palette {target} exceeds kappa = {pre.kappa}")
    if target == pre.kappa:
        return KappaReduction(pre)
    union = pre.first | pre.last
    if len(union) <= target:
        fill = sorted(pre.palette - union)[: target - len(union)]
        return KappaReduction(PrePalette(union | set(fill), pre.alpha0, pre.first, pre.last, pre.alpha_last))
    base = pre.first | {pre.alpha_last}
    extra = sorted(pre.last - base)[: target - len(base)]
    palette = base | set(extra)
    keep = pre.last & palette
    fill = sorted(palette - pre.last)[: len(pre.last) - len(keep)]
    last = keep | set(fill)
    recolor = dict(zip(sorted(last - pre.last), sorted(pre.last - last)))
    sub = PrePalette(palette, pre.alpha0, pre.first, last, pre.alpha_last)
    return KappaReduction(sub, recolor)


@dataclass(frozen=True)
class LengthReduction:
    """Extends a coloring of T_(-1) back to T by coloring E_l."""

    alpha_prev: int
    last: frozenset[int]
    alpha_last: int

    def apply(self, col: CatColoring) -> CatColoring:
        pend = self.last - {self.alpha_prev, self.alpha_last}
        return CatColoring(col.alphas + (self.alpha_last,), col.hats + (pend,))


def reduce_length(cat: Caterpillar, pre: PrePalette) -> tuple[Caterpillar, PrePalette, LengthReduction]:
    """Drop x_l: pick alpha_(l-1) in Cl - alpha_l and C_(l-1) meeting Cl only there."""
    ell = cat.length
    if ell < 2:
        raise ValueError("cannot shorten a caterpillar of length 1")
    shorter = cat.drop_last()
    d_prev = cat.degrees[-2]
    if ell == 2:
        # T_(-1) has a single spine vertex, so C_(l-1) is C1 itself.
        meet = pre.first & pre.last
        if len(meet) != 1 or pre.alpha_last in meet or pre.alpha0 in meet:
            raise ValueError("boundary sets cannot share exactly the middle spine edge")
        (alpha_prev,) = meet
        prev = pre.first
    else:
        alpha_prev = min(pre.last - {pre.alpha_last})
        pool = sorted(pre.palette - pre.last)
        if len(pool) < d_prev - 1:
            raise ValueError(f"palette too small to shorten {cat}")
        prev = frozenset([alpha_prev, *pool[: d_prev - 1]])
    sub = PrePalette(pre.palette, pre.alpha0, pre.first, prev, alpha_prev)
    return shorter, sub, LengthReduction(alpha_prev, pre.last, pre.alpha_last)


def lift_to_supertree(cat: Caterpillar, bigger: Caterpillar, pre: PrePalette) -> PrePalette:
    """Boundary for a same-length caterpillar with larger degrees; C1, Cl grow lowest-first."""
    if bigger.length != cat.length or any(b < a for a, b in zip(cat.degrees, bigger.degrees)):
        raise ValueError(f"{bigger} does not contain {cat}")
    if pre.kappa < bigger.sigma:
        raise ValueError(f"kappa = {pre.kappa} is below sigma({bigger}) = {bigger.sigma}")
    grow_first = bigger.degrees[0] - cat.degrees[0]
    grow_last = bigger.degrees[-1] - cat.degrees[-1]
    first = pre.first | set(sorted(pre.palette - pre.first)[:grow_first])
    last = pre.last | set(sorted(pre.palette - pre.last)[:grow_last])
    if cat.length == 1:
        last = first
    return PrePalette(pre.palette, pre.alpha0, first, last, pre.alpha_last)


def restrict(col: CatColoring, cat: Caterpillar, pre: PrePalette | None = None) -> CatColoring:
    """Drop pendant edges of a supertree coloring down to ``cat``.

    At the two end vertices the kept pendant colors are those of the target
    boundary sets when ``pre`` is given; elsewhere the highest colors go.
    """
    hats = []
    ell = cat.length
    for i, hat in enumerate(col.hats, 1):
        need = cat.degrees[i - 1] - 2
        keep = sorted(hat)
        if pre is not None and i in (1, ell):
            target = pre.first if i == 1 else pre.last
            keep = [c for c in keep if c in target]
            if len(keep) != need:
                raise EngineInvariantError(f"restriction to {cat} cannot recover the boundary at x{i}")
        hats.append(frozenset(keep[:need]))
    return CatColoring(col.alphas, tuple(hats))


def _augment(cat: Caterpillar, target: int, allow_ends: bool = False) -> Caterpillar | None:
    """Same-length supertree with sigma == target and Delta <= target - 2.

    Raises one adjacent pair of degrees; the two end vertices are left alone
    unless ``allow_ends``.
    """
    d = list(cat.degrees)
    cap = target - 2
    if max(d) > cap or cat.sigma > target:
        return None
    if cat.sigma == target:
        return cat
    ell = len(d)
    lo, hi = (0, ell - 1) if allow_ends else (1, ell - 2)
    for i in range(lo, hi):
        left = d[i - 1] if i >= 1 else 1
        right = d[i + 2] if i + 2 < ell else 1
        for a in range(d[i], cap + 1):
            b = target + 1 - a
            if not d[i + 1] <= b <= cap:
                continue
            if left + a > target + 1 or b + right > target + 1:
                continue
            new = list(d)
            new[i], new[i + 1] = a, b
            return Caterpillar(tuple(new))
    return None


# -- the color-removal step ------------------------------------------------------

@dataclass(frozen=True)
class UseBeta:
    beta: int


@dataclass(frozen=True)
class BetaEqualsAlphaSwap:
    """beta equals an end color; solve with a stand-in and swap it back afterwards."""

    beta: int
    alpha_last: int | None = None
    alpha0: int | None = None


@dataclass(frozen=True)
class FallbackStrip:
    """No usable beta for T itself: color T_(-1) with this boundary at x_(l-1)."""

    alpha_prev: int
    prev: frozenset[int]
    beta: int


Directive = Union[UseBeta, BetaEqualsAlphaSwap, FallbackStrip]


def _with_swaps(beta: int, pre: PrePalette, first: frozenset[int], last: frozenset[int]) -> Directive:
    a0 = min(first - {beta}) if beta == pre.alpha0 else None
    al = min(last - {beta}) if beta == pre.alpha_last else None
    if a0 is None and al is None:
        return UseBeta(beta)
    return BetaEqualsAlphaSwap(beta, alpha_last=al, alpha0=a0)


def choose_beta(cat: Caterpillar, pre: PrePalette, chosen: frozenset[int] | None = None) -> Directive:
    """Pick the color class to peel off: beta in C1 iff 1 is large, beta in Cl iff l is large.

    All free choices are lowest-color-first.  Needs sigma >= 6 and kappa == sigma.
    """
    chosen = large_set(cat) if chosen is None else chosen
    ell = cat.length
    first, last, palette = pre.first, pre.last, pre.palette
    in_first, in_last = 1 in chosen, ell in chosen

    def strip(alpha_prev: int) -> tuple[int, frozenset[int]]:
        pool = sorted(palette - last)[: cat.degrees[-2] - 1]
        return alpha_prev, frozenset([alpha_prev, *pool])

    if in_first and in_last:
        common = first & last
        if not common:
            raise EngineInvariantError("C1 and Cl are disjoint although both ends are large")
        return _with_swaps(min(common), pre, first, last)
    if in_first:
        if first - last:
            return _with_swaps(min(first - last), pre, first, last)
        if ell - 1 not in chosen:
            raise EngineInvariantError(f"{cat}: x(l-1) should be large when C1 == Cl")
        alpha_prev, prev = strip(min(last - {pre.alpha_last}))
        return FallbackStrip(alpha_prev, prev, alpha_prev)
    if in_last:
        if not last - first:
            raise EngineInvariantError("Cl is inside C1 although only the right end is large")
        return _with_swaps(min(last - first), pre, first, last)
    if palette - first - last:
        return UseBeta(min(palette - first - last))
    spare = last - first - {pre.alpha_last}
    if not spare:
        raise EngineInvariantError("no color of Cl - C1 - alpha_l is left")
    alpha_prev, prev = strip(min(spare))
    if ell - 1 in chosen:
        return FallbackStrip(alpha_prev, prev, alpha_prev)
    rest = last - first - {alpha_prev}
    return FallbackStrip(alpha_prev, prev, min(rest))


def _peel(
    cat: Caterpillar,
    pre: PrePalette,
    chosen: frozenset[int],
    beta: int,
    solve_reduced: Callable[[Caterpillar, PrePalette], CatColoring],
) -> CatColoring:
    """Color T' without beta, then give beta to one pendant at every large vertex."""
    reduced = derive_reduced(cat, chosen)
    first = pre.first - {beta}
    last = pre.last - {beta}
    a0 = min(first) if beta == pre.alpha0 else pre.alpha0
    al = min(last - {a0} if cat.length == 1 else last) if beta == pre.alpha_last else pre.alpha_last
    sub = PrePalette(pre.palette - {beta}, a0, first, last, al)
    col = solve_reduced(reduced, sub)
    alphas = list(col.alphas)
    hats = [h | {beta} if i in chosen else h for i, h in enumerate(col.hats, 1)]
    if beta == pre.alpha0:
        alphas[0] = beta
        hats[0] = hats[0] - {beta} | {a0}
    if beta == pre.alpha_last:
        alphas[-1] = beta
        hats[-1] = hats[-1] - {beta} | {al}
    return CatColoring(tuple(alphas), tuple(hats))


# -- base case search -------------------------------------------------------------

def spine_search(cat: Caterpillar, pre: PrePalette) -> CatColoring | None:
    """Exact search over the spine: the first coloring in lowest-color order, or None.

    Walks left to right keeping, per reachable state, the colors of E_i and of
    the spine edge leaving x_i; consecutive sets may share only that edge's
    color.  Polynomial in l for a fixed palette.
    """
    d = cat.degrees
    ell = cat.length
    palette = pre.palette
    if ell == 1:
        if pre.first != pre.last or pre.alpha0 == pre.alpha_last:
            return None
        return CatColoring((pre.alpha0, pre.alpha_last), (pre.first - {pre.alpha0, pre.alpha_last},))
    start = {(pre.first, a): None for a in sorted(pre.first - {pre.alpha0})}
    layers = [start]
    for i in range(2, ell):
        nxt: dict[tuple[frozenset[int], int], tuple[frozenset[int], int]] = {}
        size = d[i - 1]
        for state in layers[-1]:
            here, a = state
            rest = sorted(palette - here)
            for combo in combinations(rest, size - 1):
                there = frozenset(combo) | {a}
                for b in sorted(combo):
                    nxt.setdefault((there, b), state)
        if not nxt:
            return None
        layers.append(nxt)
    final = None
    for here, a in layers[-1]:
        if a in pre.last and a != pre.alpha_last and here & pre.last == {a}:
            final = (here, a)
            break
    if final is None:
        return None
    states = [final]
    for layer in reversed(layers[1:]):
        states.append(layer[states[-1]])
    states.reverse()
    alphas = [pre.alpha0] + [a for _, a in states] + [pre.alpha_last]
    sets = [s for s, _ in states] + [pre.last]
    hats = tuple(s - {alphas[i], alphas[i + 1]} for i, s in enumerate(sets))
    return CatColoring(tuple(alphas), hats)


# -- engine ----------------------------------------------------------------------

@dataclass
class CatResult:
    coloring: CatColoring | None
    route: str
    nodes: int = 0
    lifted: bool = False
    aborted: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.coloring is not None


def in_envelope(cat: Caterpillar) -> bool:
    return cat.is_nice()


def _construct(cat: Caterpillar, pre: PrePalette) -> CatColoring:
    s = cat.sigma
    if not cat.is_nice():
        raise EngineInvariantError(f"{cat} is not nice (sigma={s}, Delta={cat.max_degree}, l={cat.length})")
    if pre.kappa > s:
        red = reduce_kappa(cat, pre, s)
        return red.apply(_construct(cat, red.sub))
    if cat.length > ell_min(s):
        if cat.drop_last().sigma < s:
            return _construct(cat.reversed(), pre.reversed()).reversed()
        shorter, sub, red = reduce_length(cat, pre)
        return red.apply(_construct(shorter, sub))
    if s <= 7:
        col = spine_search(cat, pre)
        if col is None:
            raise EngineInvariantError(f"base case {cat} has no coloring for {pre.spec()}")
        return col
    if cat.drop_last().sigma < s:
        return _construct(cat.reversed(), pre.reversed()).reversed()
    chosen = large_set(cat)
    move = choose_beta(cat, pre, chosen)
    if isinstance(move, FallbackStrip):
        shorter = cat.drop_last()
        sub = PrePalette(pre.palette, pre.alpha0, pre.first, move.prev, move.alpha_prev)
        inner = frozenset(i for i in chosen if i < cat.length)
        col = _peel(shorter, sub, inner, move.beta, _construct)
        return LengthReduction(move.alpha_prev, pre.last, pre.alpha_last).apply(col)

    def via_length(reduced: Caterpillar, sub: PrePalette) -> CatColoring:
        shorter, sub2, red = reduce_length(reduced, sub)
        return red.apply(_construct(shorter, sub2))

    return _peel(cat, pre, chosen, move.beta, via_length)


def _lift_target(cat: Caterpillar, kappa: int) -> Caterpillar | None:
    for allow_ends in (False, True):
        for s in range(max(5, cat.sigma + 1), kappa + 1):
            bigger = _augment(cat, s, allow_ends)
            if bigger is not None and bigger.length >= ell_min(s):
                return bigger
    return None


def _boundary_assignments(cg: CatGraph, pre: PrePalette) -> Iterable[dict[int, int]]:
    """Per-edge pre-assignments realizing the set-wise boundary, one per choice of inner spine color."""
    ell = len(cg.pendants)
    for g1, gl in product(sorted(pre.first - {pre.alpha0}), sorted(pre.last - {pre.alpha_last})):
        out: dict[int, int] = {}
        sides = [
            (cg.spine[0], cg.spine[1], cg.pendants[0], pre.alpha0, g1, pre.first),
            (cg.spine[ell], cg.spine[ell - 1], cg.pendants[-1], pre.alpha_last, gl, pre.last),
        ]
        ok = True
        for end, inner, pend, a, g, colors in sides:
            want = {end: a, inner: g, **dict(zip(pend, sorted(colors - {a, g})))}
            for e, c in want.items():
                if out.setdefault(e, c) != c:
                    ok = False
        if ok:
            yield out


def exact_boundary_search(cat: Caterpillar, pre: PrePalette, cfg: SearchConfig = DEFAULT_CONFIG) -> CatResult:
    """Decide the boundary instance with the generic exact solver."""
    cg = as_graph(cat)
    colors = sorted(pre.palette)
    to_local = {c: i for i, c in enumerate(colors)}
    nodes = 0
    aborted = False
    for assignment in _boundary_assignments(cg, pre):
        local = {e: to_local[c] for e, c in assignment.items()}
        out = colorable_with(cg.graph, len(colors), local, cfg)
        nodes += out.nodes
        if isinstance(out, Feasible):
            mapped = EdgeColoring({e: colors[c] for e, c in out.coloring.colors.items()}, max(colors) + 1)
            return CatResult(from_edge_coloring(mapped, cg), "fallback", nodes)
        if isinstance(out, Aborted):
            aborted = True
    return CatResult(None, "fallback", nodes, aborted=aborted)


def solve_precolored(cat: Caterpillar, pre: PrePalette, cfg: SearchConfig = DEFAULT_CONFIG) -> CatResult:
    """Extend a boundary instance to a strong coloring of the caterpillar, or report none exists."""
    pre.validate(cat)
    notes: list[str] = []
    if cat.is_nice():
        try:
            return CatResult(_check(_construct(cat, pre), cat, pre), "constructive")
        except EngineInvariantError as exc:
            log.warning("constructive route failed on %s %s: %s", cat, pre.spec(), exc)
            notes.append(str(exc))
    else:
        bigger = _lift_target(cat, pre.kappa)
        if bigger is not None:
            try:
                col = _construct(bigger, lift_to_supertree(cat, bigger, pre))
                return CatResult(_check(restrict(col, cat, pre), cat, pre), "constructive", lifted=True)
            except EngineInvariantError as exc:
                log.warning("lifted route via %s failed on %s %s: %s", bigger, cat, pre.spec(), exc)
                notes.append(str(exc))
    result = exact_boundary_search(cat, pre, cfg)
    result.notes = notes + result.notes
    return result


def _check(col: CatColoring, cat: Caterpillar, pre: PrePalette) -> CatColoring:
    problems = col.problems(cat)
    if problems or not col.meets(pre):
        raise EngineInvariantError(f"engine produced a bad coloring of {cat}: {problems or 'boundary mismatch'}")
    return col


def solve_with_extra_color(cat: Caterpillar, pre: PrePalette, cfg: SearchConfig = DEFAULT_CONFIG) -> CatResult:
    """Color with kappa >= sigma + 1 colors by padding T up to sigma + 1 first."""
    s = cat.sigma
    if pre.kappa <= s:
        return solve_precolored(cat, pre, cfg)
    if s < 4:
        raise ValueError(f"needs sigma >= 4, got {s}")
    if cat.length < ell_min(s + 1):
        raise ValueError(f"{cat} is shorter than ell_min({s + 1}) = {ell_min(s + 1)}")
    pre.validate(cat)
    bigger = _augment(cat, s + 1) or _augment(cat, s + 1, allow_ends=True)
    if bigger is None:
        raise EngineInvariantError(f"no supertree of {cat} with sigma {s + 1}")
    res = solve_precolored(bigger, lift_to_supertree(cat, bigger, pre), cfg)
    if res.coloring is None:
        return res
    try:
        col = _check(restrict(res.coloring, cat, pre), cat, pre)
    except EngineInvariantError as exc:
        log.warning("restriction of %s back to %s failed: %s", bigger, cat, exc)
        return solve_precolored(cat, pre, cfg)
    return CatResult(col, res.route, res.nodes, lifted=True, notes=res.notes)


def tight_family(s: int) -> tuple[Caterpillar, PrePalette]:
    """A caterpillar of length s-1 with sigma = s and a boundary at kappa = s that cannot be extended.

    Degrees alternate floor((s+1)/2), ceil((s+1)/2).  For odd s = 2d-1 both
    ends get colors 1..d with alpha0 = alpha_l = 1; for even s = 2d-2 the
    ends get 1..d-1 and d..2d-2 with alpha_l = d.
    """
    if s < 5:
        raise ValueError(f"the family starts at sigma = 5, got {s}")
    lo, hi = (s + 1) // 2, (s + 2) // 2
    degrees = tuple(lo if i % 2 == 0 else hi for i in range(s - 1))
    cat = Caterpillar(degrees)
    palette = frozenset(range(s))
    if s % 2:
        d = (s + 1) // 2
        ends = frozenset(range(d))
        return cat, PrePalette(palette, 0, ends, ends, 0)
    d = (s + 2) // 2
    return cat, PrePalette(palette, 0, frozenset(range(d - 1)), frozenset(range(d - 1, 2 * d - 2)), d - 1)
