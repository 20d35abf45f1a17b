"""Text formats: edge lists and edge colorings.

Edge list::

    n m
    u v        # m lines, 0 <= u < v < n

Coloring::

    kappa
    u v c      # one line per colored edge, c is 1-based

Lines starting with ``#`` are comments in both formats.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .coloring import EdgeColoring
from .graph import Graph, GraphError


class FormatError(ValueError):
    pass


def _content_lines(lines: Iterable[str]) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        out.append((lineno, text.split()))
    return out


def parse_edge_list(text: str) -> Graph:
    rows = _content_lines(text.splitlines())
    if not rows:
        raise FormatError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers") from None
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    pairs = []
    for lineno, fields in body:
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers") from None
        if not 0 <= u < v < n:
            raise FormatError(f"line {lineno}: need 0 <= u < v < n, got {u} {v}")
        pairs.append((u, v))
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Read a (possibly partial) coloring of ``g``; edges are matched by endpoints."""
    rows = _content_lines(text.splitlines())
    if not rows:
        raise FormatError("empty coloring")
    lineno, head = rows[0]
    if len(head) != 1:
        raise FormatError(f"line {lineno}: expected 'kappa'")
    kappa = int(head[0])
    colors: dict[int, int] = {}
    for lineno, fields in rows[1:]:
        if len(fields) != 3:
            raise FormatError(f"line {lineno}: expected 'u v c'")
        u, v, c = (int(x) for x in fields)
        try:
            e = g.edge_id(u, v)
        except GraphError:
            raise FormatError(f"line {lineno}: {u} {v} is not an edge") from None
        if not 1 <= c <= kappa:
            raise FormatError(f"line {lineno}: color {c} outside 1..{kappa}")
        if e in colors:
            raise FormatError(f"line {lineno}: edge {u} {v} colored twice")
        colors[e] = c - 1
    return EdgeColoring(colors, kappa)


def format_coloring(g: Graph, c: EdgeColoring, comments: Iterable[str] = ()) -> str:
    lines = [f"# {x}" for x in comments]
    lines.append(str(c.kappa))
    for e, (u, v) in enumerate(g.edges):
        if e in c.colors:
            lines.append(f"{u} {v} {c.colors[e] + 1}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def read_coloring(path: str | Path, g: Graph) -> EdgeColoring:
    return parse_coloring(Path(path).read_text(), g)


def write_text(path: str | Path | None, text: str, stdout: TextIO) -> None:
    if path is None or str(path) == "-":
        stdout.write(text)
    else:
        Path(path).write_text(text)
