"""Reference colorings of small caterpillars and the sigma = 7 reduction table.

Rows use 1-based colors in spine form: ``a0 {pendants at x1} a1 ... al``.
``load_fixture`` reads the same rows back from the shipped coloring files.
"""

from __future__ import annotations

from importlib import resources

from .caterpillar import Caterpillar, CatColoring, as_graph, to_edge_coloring
from .coloring import EdgeColoring
from .formats import format_coloring, parse_coloring

SIGMA5_CAT = Caterpillar((3,) * 8)
SIGMA5_ROWS = (
    "1 {3} 2 {4} 5 {1} 3 {4} 2 {5} 1 {3} 4 {5} 2 {1} 3",
    "1 {3} 2 {4} 5 {1} 3 {4} 2 {5} 1 {3} 4 {5} 2 {3} 1",
    "1 {2} 3 {5} 4 {1} 2 {5} 3 {1} 4 {2} 5 {1} 3 {4} 2",
    "1 {2} 3 {5} 4 {1} 2 {5} 3 {1} 4 {2} 5 {1} 3 {2} 4",
    "1 {3} 2 {4} 5 {1} 3 {4} 2 {5} 1 {4} 3 {5} 2 {4} 1",
    "1 {3} 2 {4} 5 {1} 3 {4} 2 {5} 1 {4} 3 {5} 2 {1} 4",
    "1 {3} 2 {4} 5 {1} 3 {2} 4 {5} 1 {2} 3 {5} 4 {1} 2",
    "1 {3} 2 {4} 5 {1} 3 {4} 2 {5} 1 {4} 3 {2} 5 {4} 1",
    "1 {3} 2 {4} 5 {1} 3 {4} 2 {5} 1 {4} 3 {2} 5 {1} 4",
    "1 {3} 2 {4} 5 {1} 3 {2} 4 {1} 5 {2} 3 {1} 4 {5} 2",
    "1 {3} 2 {4} 5 {1} 3 {2} 4 {1} 5 {2} 3 {1} 4 {2} 5",
)

ALT_CAT = Caterpillar((4, 3, 4, 3, 4, 3))
ALT_ROWS = (
    "1 {3,4} 2 {6} 5 {3,4} 1 {2} 6 {4,5} 3 {2} 1",
    "1 {2,4} 3 {5} 6 {1,4} 2 {3} 5 {4,5} 1 {3} 2",
    "1 {3,4} 2 {6} 5 {3,4} 1 {2} 6 {3,4} 5 {2} 1",
    "1 {2,4} 3 {5} 6 {1,4} 2 {5} 3 {4,6} 1 {5} 2",
    "1 {2,4} 3 {5} 6 {2,4} 1 {5} 3 {4,6} 2 {1} 5",
    "1 {2,4} 3 {5} 6 {2,4} 1 {5} 3 {2,4} 6 {5} 1",
    "1 {2,3} 4 {5} 6 {2,3} 1 {5} 4 {2,3} 6 {1} 5",
    "1 {3,4} 2 {6} 5 {1,4} 3 {2} 6 {1,5} 4 {3} 2",
    "1 {2,3} 4 {5} 6 {1,3} 2 {5} 4 {1,6} 3 {5} 2",
    "1 {2,3} 4 {5} 6 {1,3} 2 {5} 4 {1,6} 3 {2} 5",
    "1 {2,3} 4 {5} 6 {1,3} 2 {5} 4 {1,3} 6 {5} 2",
    "1 {2,4} 3 {5} 6 {1,4} 2 {5} 3 {1,4} 6 {2} 5",
)

SKEW_CAT = Caterpillar((4, 3, 4, 3, 3, 4))
SKEW_ROWS = (
    "1 {2,4} 3 {5} 6 {2,4} 1 {3} 5 {6} 4 {2,3} 1",
    "1 {3,4} 2 {5} 6 {1,4} 3 {2} 5 {6} 1 {3,4} 2",
    "1 {3,4} 2 {5} 6 {1,3} 4 {5} 2 {6} 3 {4,5} 1",
    "1 {2,4} 3 {6} 5 {1,2} 4 {3} 6 {2} 1 {4,5} 3",
    "1 {2,4} 3 {6} 5 {1,2} 4 {3} 6 {2} 1 {3,4} 5",
    "1 {3,4} 2 {5} 6 {3,4} 1 {5} 2 {3} 6 {4,5} 1",
    "1 {3,4} 2 {6} 5 {3,4} 1 {6} 2 {3} 5 {1,6} 4",
    "1 {3,4} 2 {6} 5 {1,3} 4 {6} 2 {3} 1 {4,6} 5",
    "1 {3,4} 2 {6} 5 {1,4} 3 {2} 6 {1} 4 {3,5} 2",
    "1 {2,4} 3 {6} 5 {1,2} 4 {3} 6 {1} 2 {3,4} 5",
    "1 {3,4} 2 {5} 6 {1,4} 3 {5} 2 {1} 6 {4,5} 3",
    "1 {3,4} 2 {6} 5 {1,3} 4 {6} 2 {1} 3 {4,6} 5",
)

# (T, T'_(-1)) for the sigma = 7, l = 7 caterpillars.
SIGMA7_REDUCTIONS = (
    ("Cat(3,5,3,5,3,5,3)", "Cat(3,4,3,4,3,4)"),
    ("Cat(5,3,5,3,3,5,3)", "Cat(4,3,4,3,3,4)"),
    ("Cat(5,3,3,5,3,5,3)", "Cat(4,3,3,4,3,4)"),
    ("Cat(5,3,5,3,5,3,5)", "Cat(4,3,4,3,4,3)"),
    ("Cat(5,3,3,5,3,3,5)", "Cat(4,3,3,4,3,3)"),
    ("Cat(3,5,3,5,3,4,4)", "Cat(3,4,3,4,3,3)"),
    ("Cat(5,3,5,3,4,4,4)", "Cat(4,3,4,3,3,4)"),
    ("Cat(3,5,3,4,4,4,4)", "Cat(3,4,3,3,4,3)"),
    ("Cat(5,3,4,4,4,4,4)", "Cat(4,3,3,4,3,4)"),
    ("Cat(4,4,4,4,4,4,4)", "Cat(3,4,3,4,3,4)"),
    ("Cat(3,5,3,4,4,3,5)", "Cat(3,4,3,3,4,3)"),
    ("Cat(5,3,4,4,4,3,5)", "Cat(4,3,3,4,3,3)"),
    ("Cat(4,4,3,5,3,4,4)", "Cat(3,4,3,4,3,3)"),
    ("Cat(4,4,3,5,3,3,5)", "Cat(3,4,3,4,3,3)"),
)

# Rows printed with a repeated color, and the only single-entry change that
# makes them valid.  The fixtures above stay verbatim.
ERRATA = {
    ("alt6", 1): "1 {2,4} 3 {5} 6 {1,4} 2 {3} 5 {4,6} 1 {3} 2",
}

TABLES = {
    "sigma5": (SIGMA5_CAT, SIGMA5_ROWS),
    "alt6": (ALT_CAT, ALT_ROWS),
    "skew6": (SKEW_CAT, SKEW_ROWS),
}


def rows(name: str) -> list[CatColoring]:
    _, raw = TABLES[name]
    return [CatColoring.from_row(r) for r in raw]


def fixture_name(name: str, index: int) -> str:
    return f"{name}_{index + 1:02d}.col"


def row_text(name: str, index: int) -> str:
    """The row as a coloring file on ``as_graph`` of its caterpillar."""
    cat, raw = TABLES[name]
    cg = as_graph(cat)
    col = to_edge_coloring(CatColoring.from_row(raw[index]), cg, kappa=cat.sigma)
    return format_coloring(cg.graph, col, [f"{cat} row {index + 1}: {raw[index]}"])


def load_fixture(name: str, index: int) -> EdgeColoring:
    cat, _ = TABLES[name]
    text = resources.files(__package__).joinpath("data", fixture_name(name, index)).read_text()
    return parse_coloring(text, as_graph(cat).graph)


def write_fixtures(directory) -> list[str]:
    """Regenerate the shipped fixture files; returns the names written."""
    from pathlib import Path

    out = []
    for name, (_, raw) in TABLES.items():
        for i in range(len(raw)):
            path = Path(directory) / fixture_name(name, i)
            path.write_text(row_text(name, i))
            out.append(path.name)
    return out
