import math
import random

import networkx as nx
import pytest

from strongcolor.graph import (
    Graph,
    GraphError,
    attach_leaf,
    bridges,
    build_graph,
    components,
    conflict_pairs,
    delete_edges,
    delete_vertices,
    edge_subgraph,
    girth,
    is_forest,
    is_tree,
    sigma,
    subdivide_edge,
)
from strongcolor.generators import cycle, gen_caterpillar, gen_counterexample, petersen

from conftest import nx_conflicts, random_graph, to_nx


def test_build_empty_and_path():
    assert build_graph([], n=0).edge_count == 0
    p3 = build_graph([(0, 1), (1, 2)])
    assert p3.degrees() == [1, 2, 1]
    assert p3.edges == ((0, 1), (1, 2))


def test_build_rejects_loops_and_duplicates():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph([(0, 0)])
    with pytest.raises(GraphError, match="duplicate"):
        build_graph([(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 5)])


def test_edge_ids_follow_input_order():
    g = build_graph([(3, 1), (0, 2), (1, 2)])
    assert g.edges == ((1, 3), (0, 2), (1, 2))
    assert g.edge_id(2, 1) == 2


def test_five_spine_caterpillar_has_fifteen_edges():
    # spine x0..x6 gives 6 spine edges; pendants 3+1+0+2+3 = 9
    g = gen_caterpillar((5, 3, 2, 4, 5))
    assert g.edge_count == 15
    assert sigma(g) == 8
    assert g.max_degree() == 5


def test_sigma_examples():
    assert sigma(build_graph([(0, i) for i in range(1, 5)])) == 4
    assert sigma(build_graph([(0, 1)])) == 1
    with pytest.raises(GraphError):
        sigma(Graph(3, []))


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(build_graph([(0, 1), (1, 2), (1, 3)])) == math.inf
    assert girth(gen_counterexample(1, 3)) == 4
    assert girth(petersen()) == 5


def test_bridges_examples():
    tree = build_graph([(0, 1), (1, 2), (1, 3), (3, 4)])
    assert bridges(tree) == set(range(4))
    assert bridges(cycle(5)) == set()
    two_triangles = build_graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert bridges(two_triangles) == {3}


def test_conflict_examples():
    p3 = build_graph([(0, 1), (1, 2)])
    assert conflict_pairs(p3, 0) == {1} and conflict_pairs(p3, 1) == {0}
    c5 = cycle(5)
    assert conflict_pairs(c5, 0) == {1, 2, 3, 4}
    p5 = build_graph([(0, 1), (1, 2), (2, 3), (3, 4)])
    assert 3 not in conflict_pairs(p5, 0)


def test_mutations():
    single = attach_leaf(Graph(1, []), 0).graph
    assert single.edges == ((0, 1),)
    c6 = subdivide_edge(cycle(4), 0, 2)
    assert c6.graph.edge_count == 6 and girth(c6.graph) == 6
    assert c6.edge_map == {1: 0, 2: 1, 3: 2}
    p2 = delete_vertices(build_graph([(0, 1), (1, 2)]), [2])
    assert p2.graph.edges == ((0, 1),)
    d = delete_edges(cycle(4), [0])
    assert d.graph.edge_count == 3 and d.edge_map[3] == 2
    with pytest.raises(GraphError):
        delete_vertices(cycle(4), [9])
    with pytest.raises(GraphError):
        subdivide_edge(cycle(4), 7, 2)


def test_edge_subgraph_renumbers():
    g = cycle(6)
    sub = edge_subgraph(g, [4, 1])
    assert sub.edge_map == {1: 0, 4: 1}
    assert sub.graph.n == 4


def test_components_and_forest():
    g = build_graph([(0, 1), (2, 3), (3, 4)], n=6)
    assert components(g) == [[0, 1], [2, 3, 4], [5]]
    assert is_forest(g) and not is_tree(g)
    assert is_tree(build_graph([(0, 1), (1, 2)]))


def test_conflict_relation_matches_line_graph_square():
    rng = random.Random(1)
    for _ in range(150):
        g = random_graph(rng, n_max=12, m_max=25)
        oracle = nx_conflicts(g)
        for e in range(g.edge_count):
            mine = conflict_pairs(g, e)
            assert mine == oracle[e]
            assert all(e in conflict_pairs(g, f) for f in mine)
            u, v = g.edges[e]
            assert len(mine) >= g.degree(u) + g.degree(v) - 2


def test_sigma_is_incident_count_plus_one():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng)
        incident = max(g.degree(u) + g.degree(v) - 2 for u, v in g.edges)
        assert sigma(g) - 1 == incident


def _girth_by_edge_deletion(g: Graph):
    h = to_nx(g)
    best = math.inf
    for u, v in list(h.edges):
        h.remove_edge(u, v)
        try:
            best = min(best, 1 + nx.shortest_path_length(h, u, v))
        except nx.NetworkXNoPath:
            pass
        h.add_edge(u, v)
    return best


def test_girth_matches_edge_deletion_oracle():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, n_max=12, m_max=18)
        assert girth(g) == _girth_by_edge_deletion(g)


def test_bridges_match_component_counting():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng, n_max=10, m_max=20)
        base = len(components(g))
        brute = {e for e in range(g.edge_count) if len(components(delete_edges(g, [e]).graph)) > base}
        assert bridges(g) == brute
        assert bridges(g) == {g.edge_id(u, v) for u, v in nx.bridges(to_nx(g))}
