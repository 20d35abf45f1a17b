"""Strong edge-coloring toolkit: exact search, caterpillar pre-coloring, sigma-coloring of high-girth graphs."""

from .caterpillar import (
    CatColoring,
    Caterpillar,
    PrePalette,
    as_graph,
    d_star,
    derive_reduced,
    ell_min,
    large_set,
    solve_precolored,
    solve_with_extra_color,
)
from .coloring import EdgeColoring, conflict_graph, is_strong, max_antimatching, relabel, verify
from .exact import SearchConfig, colorable_with, strong_chromatic_index
from .graph import Graph, bridges, build_graph, conflict_pairs, girth, sigma
from .planar import ColoringFailure, color_graph, color_tree

__version__ = "0.1.0"

__all__ = [
    "CatColoring",
    "Caterpillar",
    "ColoringFailure",
    "EdgeColoring",
    "Graph",
    "PrePalette",
    "SearchConfig",
    "as_graph",
    "bridges",
    "build_graph",
    "color_graph",
    "color_tree",
    "colorable_with",
    "conflict_graph",
    "conflict_pairs",
    "d_star",
    "derive_reduced",
    "ell_min",
    "girth",
    "is_strong",
    "large_set",
    "max_antimatching",
    "relabel",
    "sigma",
    "solve_precolored",
    "solve_with_extra_color",
    "strong_chromatic_index",
    "verify",
]
