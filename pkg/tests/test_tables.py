import time

import pytest

from strongcolor import tables
from strongcolor.caterpillar import CatColoring, Caterpillar, PrePalette, as_graph, derive_reduced, large_set, solve_precolored
from strongcolor.coloring import verify

ALL_ROWS = [(name, i) for name, (_, raw) in tables.TABLES.items() for i in range(len(raw))]


def test_table_sizes():
    assert {name: len(raw) for name, (_, raw) in tables.TABLES.items()} == {"sigma5": 11, "alt6": 12, "skew6": 12}
    assert [str(cat) for cat, _ in tables.TABLES.values()] == [
        "Cat(3,3,3,3,3,3,3,3)",
        "Cat(4,3,4,3,4,3)",
        "Cat(4,3,4,3,3,4)",
    ]


@pytest.mark.parametrize("name, i", ALL_ROWS)
def test_fixture_matches_transcription(name, i):
    cat, raw = tables.TABLES[name]
    cg = as_graph(cat)
    from strongcolor.caterpillar import from_edge_coloring

    assert from_edge_coloring(tables.load_fixture(name, i), cg).row() == raw[i]
    assert CatColoring.from_row(raw[i]).row() == raw[i]


@pytest.mark.parametrize("name, i", ALL_ROWS)
def test_rows_verify_except_known_errata(name, i):
    cat, _ = tables.TABLES[name]
    problems = verify(as_graph(cat).graph, tables.load_fixture(name, i))
    if (name, i) in tables.ERRATA:
        assert len(problems) == 1
    else:
        assert problems == []


def test_erratum_is_a_single_entry_fix():
    (name, i), fixed = next(iter(tables.ERRATA.items()))
    cat, raw = tables.TABLES[name]
    printed = CatColoring.from_row(raw[i])
    corrected = CatColoring.from_row(fixed)
    assert corrected.is_valid(cat) and not printed.is_valid(cat)
    assert printed.alphas == corrected.alphas
    assert sum(a != b for a, b in zip(printed.hats, corrected.hats)) == 1
    # the printed hat {4,5} at x5 repeats alpha4 = 5
    assert printed.problems(cat)


@pytest.mark.parametrize("name, i", ALL_ROWS)
def test_engine_solves_each_row_boundary(name, i):
    cat, raw = tables.TABLES[name]
    text = tables.ERRATA.get((name, i), raw[i])
    row = CatColoring.from_row(text)
    pre = PrePalette(frozenset(range(cat.sigma)), row.alphas[0], row.edge_set(1), row.edge_set(cat.length), row.alphas[-1])
    res = solve_precolored(cat, pre)
    assert res.feasible and res.coloring.meets(pre) and res.coloring.is_valid(cat)


@pytest.mark.parametrize("spec, expected", tables.SIGMA7_REDUCTIONS)
def test_sigma7_reduction_table(spec, expected):
    cat = Caterpillar.parse(spec)
    assert cat.sigma == 7 and cat.length == 7
    assert str(derive_reduced(cat, large_set(cat)).drop_last()) == expected


def test_fixture_writer_reproduces_shipped_files(tmp_path):
    names = tables.write_fixtures(tmp_path)
    assert len(names) == 35
    for name, i in ALL_ROWS:
        text = (tmp_path / tables.fixture_name(name, i)).read_text()
        assert text == tables.row_text(name, i)
        from importlib import resources

        shipped = resources.files("strongcolor").joinpath("data", tables.fixture_name(name, i)).read_text()
        assert shipped == text


def test_loading_all_fixtures_is_fast():
    start = time.perf_counter()
    for name, i in ALL_ROWS:
        cat, _ = tables.TABLES[name]
        verify(as_graph(cat).graph, tables.load_fixture(name, i))
    assert time.perf_counter() - start < 1.0
