import pytest

from strongcolor.coloring import EdgeColoring
from strongcolor.formats import FormatError, format_coloring, format_edge_list, parse_coloring, parse_edge_list
from strongcolor.generators import cycle


def test_edge_list_round_trip():
    g = cycle(5)
    text = format_edge_list(g, ["five-cycle"])
    assert text.startswith("# five-cycle\n5 5\n0 1\n")
    assert parse_edge_list(text) == g


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# hi\n\n3 2\n0 1\n# mid\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 5\n", "2 2\n0 1\n0 1\n", "x y\n", "3 1\n0 a\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_coloring_round_trip_is_one_based():
    g = cycle(5)
    c = EdgeColoring.from_list([0, 1, 2, 3, 4], 5)
    text = format_coloring(g, c)
    assert text.splitlines()[:2] == ["5", "0 1 1"]
    assert parse_coloring(text, g) == c


def test_coloring_matches_edges_by_endpoints_and_allows_partial():
    g = cycle(4)
    c = parse_coloring("4\n1 0 2\n3 2 1\n", g)
    assert c.colors == {0: 1, 2: 0}
    assert c.uncolored(g) == [1, 3]


@pytest.mark.parametrize("text", ["", "4\n0 2 1\n", "4\n0 1 5\n", "4\n0 1 1\n1 0 2\n", "4 4\n", "4\n0 1\n"])
def test_coloring_errors(text):
    with pytest.raises(FormatError):
        parse_coloring(text, cycle(4))
