import math

import pytest

from strongcolor.exact import strong_chromatic_index
from strongcolor.generators import (
    JellyfishSpec,
    complete,
    cube,
    cycle,
    gen_caterpillar,
    gen_counterexample,
    gen_high_girth_instance,
    gen_jellyfish,
    gen_random_tree,
    jellyfish_index,
    named_graph,
    petersen,
    tree_from_pruefer,
)
from strongcolor.graph import GraphError, girth, is_tree, sigma

# frozen once from gen_random_tree(10, 42)
TREE_10_42 = ((1, 5), (0, 6), (0, 4), (3, 4), (3, 7), (2, 3), (1, 2), (1, 8), (8, 9))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_counterexample_structure(n, d):
    g = gen_counterexample(n, d)
    assert g.edge_count == 3 * n + 1 + n * (d - 2)
    assert sigma(g) == d + 1 and g.max_degree() == max(d, 2)


def test_counterexample_small_cases():
    g = gen_counterexample(2, 3)
    assert g.n == 9 and sigma(g) == 4
    assert sorted(v for v in range(7) if g.degree(v) == 3) == [2, 5]
    assert gen_counterexample(1, 2).edges == cycle(4).edges
    g1 = gen_counterexample(1, 4)
    assert g1.n == 6 and g1.degree(2) == 4
    with pytest.raises(ValueError):
        gen_counterexample(0, 3)
    with pytest.raises(ValueError):
        gen_counterexample(1, 1)


def test_counterexample_needs_an_extra_color():
    for n, d in ((1, 3), (2, 3), (1, 4)):
        g = gen_counterexample(n, d)
        assert strong_chromatic_index(g).value > sigma(g)


def test_jellyfish_spec():
    spec = JellyfishSpec.parse("4:2,2,2,2")
    assert spec.degrees == (4, 4, 4, 4) and spec.edge_count == 12 and spec.sigma == 7
    g = gen_jellyfish(spec)
    assert g.edge_count == 12 and sigma(g) == 7
    assert gen_jellyfish(JellyfishSpec(5, (0,) * 5)).edges == cycle(5).edges
    for bad in ("2:1,1", "4:1,1,1", "4:1,-1,1,1"):
        with pytest.raises(ValueError):
            JellyfishSpec.parse(bad)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3:2,2,2", 9),  # n = 3 gives m
        ("4:1,2,0,0", 7),  # n = 4 gives sigma + 1 (sigma 6)
        ("7:1,1,1,1,1,1,1", 6),  # the regular (7,3) case
        ("5:1,1,1,1,1", 5),  # odd and regular: ceil(10/2)
        ("5:2,0,0,0,0", 6),  # v1 has degree sigma - 1
        ("5:2,2,0,0,0", 7),  # no exception applies, so sigma
        ("10:1,0,1,0,1,0,1,0,1,0", 5),  # (10,4) with degree 3 on every other vertex
    ],
)
def test_jellyfish_index_examples(text, expected):
    spec = JellyfishSpec.parse(text)
    if spec.sigma < 4:
        with pytest.raises(ValueError):
            jellyfish_index(spec)
        return
    assert jellyfish_index(spec) == expected
    assert strong_chromatic_index(gen_jellyfish(spec)).value == expected


def test_jellyfish_rotated_pattern():
    # n = 8, sigma = 5, degree sigma - 1 = 4 at positions 1 and 4 after a rotation
    spec = JellyfishSpec(8, (0, 0, 2, 0, 0, 2, 0, 0))
    assert spec.sigma == 5
    assert jellyfish_index(spec) == 6
    assert strong_chromatic_index(gen_jellyfish(spec)).value == 6


def test_jellyfish_oracle_on_a_grid():
    checked = 0
    for n in (3, 4, 5, 6):
        for base in range(3 ** n):
            p = tuple((base // 3 ** i) % 3 for i in range(n))
            spec = JellyfishSpec(n, p)
            if spec.sigma < 4 or spec.edge_count > 16:
                continue
            assert jellyfish_index(spec) == strong_chromatic_index(gen_jellyfish(spec)).value, spec
            checked += 1
    assert checked > 150


KNOWN_GAPS = [
    "7:2,0,0,1,1,0,0",
    "7:2,0,0,1,1,1,0",
    "7:2,0,1,1,1,1,0",
    "10:2,0,0,1,1,0,0,2,0,0",
]


@pytest.mark.parametrize("text", KNOWN_GAPS)
def test_jellyfish_formula_gaps_are_real(text):
    # the closed form says sigma = 5 here; two independent searches need 6
    from conftest import naive_chi

    spec = JellyfishSpec.parse(text)
    g = gen_jellyfish(spec)
    assert jellyfish_index(spec) == spec.sigma == 5
    assert strong_chromatic_index(g).value == 6
    if g.edge_count <= 11:
        assert naive_chi(g) == 6


def test_some_gaps_follow_from_counting():
    from strongcolor.coloring import max_induced_matching

    for text in ("7:2,0,0,1,1,0,0", "10:2,0,0,1,1,0,0,2,0,0"):
        g = gen_jellyfish(JellyfishSpec.parse(text))
        assert -(-g.edge_count // len(max_induced_matching(g))) == 6


def test_caterpillar_and_named_graphs():
    g = gen_caterpillar((3, 3))
    assert g.n == 6 and g.edge_count == 5 and sigma(g) == 5
    g1 = gen_caterpillar((5, 3, 2, 4, 5))
    assert (g1.n, g1.edge_count, sigma(g1), g1.max_degree()) == (16, 15, 8, 5)
    assert (cube().edge_count, girth(cube())) == (12, 4)
    assert (petersen().edge_count, girth(petersen())) == (15, 5)
    assert complete(4).edge_count == 6 and named_graph("C7").edge_count == 7
    with pytest.raises(ValueError):
        named_graph("dodecahedron")
    with pytest.raises(ValueError):
        cycle(2)


def test_pruefer_and_random_trees():
    star = tree_from_pruefer((0, 0))
    assert star.n == 4 and star.degree(0) == 3
    with pytest.raises(ValueError):
        tree_from_pruefer((5,))
    assert gen_random_tree(10, 42).edges == TREE_10_42
    assert gen_random_tree(10, 42).edges == gen_random_tree(10, 42).edges
    assert gen_random_tree(10, 43).edges != TREE_10_42
    for n in (1, 2, 3, 17):
        t = gen_random_tree(n, 1)
        assert t.n == n and is_tree(t)


@pytest.mark.parametrize(
    "base, k, s, want_girth",
    [(cube(), 11, 5, 44), (complete(4), 14, 5, 42), (petersen(), 9, 5, 45), (cube(), 9, 6, 36)],
)
def test_high_girth_instances(base, k, s, want_girth):
    g = gen_high_girth_instance(base, k, s)
    assert girth(g) == want_girth >= k * girth(base)
    assert sigma(g) == s and g.max_degree() == s - 2


def test_high_girth_cycle_at_sigma_four():
    # with sigma 4 one end of the heavy edge must have degree 3 = sigma - 1
    g = gen_high_girth_instance(cycle(5), 9, 4)
    assert girth(g) == 45 and sigma(g) == 4 and g.max_degree() == 3


def test_high_girth_instance_rejections():
    with pytest.raises(ValueError, match="k >= 11"):
        gen_high_girth_instance(cube(), 10, 5)
    with pytest.raises(ValueError):
        gen_high_girth_instance(cube(), 11, 4)
    with pytest.raises(ValueError):
        gen_high_girth_instance(cube(), 2, 5)


def test_high_girth_instance_on_a_tree_has_no_girth_limit():
    g = gen_high_girth_instance(gen_caterpillar((2,)), 4, 6)
    assert girth(g) == math.inf and sigma(g) == 6 and g.max_degree() == 4


def test_high_girth_sigma_mismatch_is_reported():
    # a base with degree-4 vertices already gives sigma 7 on unsubdivided ends
    with pytest.raises((GraphError, ValueError)):
        gen_high_girth_instance(complete(5), 14, 5)
