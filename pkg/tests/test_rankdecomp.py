import random

import pytest

from oracles import random_graph, rankwidth_oracle
from wsmkit.config import LIMITS
from wsmkit.errors import SizeCapExceeded, StructureError
from wsmkit.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph, star_graph
from wsmkit.rankdecomp import (
    RankDecomposition,
    decomposition_width,
    rankwidth,
    rankwidth_at_most,
    rankwidth_of,
)


def test_known_values():
    assert rankwidth(Graph.empty(0))[0] == 0
    assert rankwidth(Graph.empty(4))[0] == 0
    assert rankwidth(complete_graph(2))[0] == 1
    assert rankwidth(complete_graph(6))[0] == 1
    assert rankwidth(star_graph(5))[0] == 1
    assert rankwidth(path_graph(7))[0] == 1
    assert rankwidth(cycle_graph(5))[0] == 2
    assert rankwidth(cycle_graph(6))[0] == 2


def test_clique_any_tree_width_one():
    g = complete_graph(4)
    d = RankDecomposition(((4, 0), (4, 1), (4, 5), (5, 2), (5, 3)), (0, 1, 2, 3))
    assert decomposition_width(g, d).width == 1


def test_witness_width_matches_value():
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 10))
        rw, d = rankwidth(g)
        assert decomposition_width(g, d).width == rw
        ok, witness = rankwidth_at_most(g, rw)
        assert ok and decomposition_width(g, witness).width <= rw
        assert rankwidth_at_most(g, rw - 1) == (False, None)


def test_disconnected_components_chain():
    g = disjoint_union(cycle_graph(5), complete_graph(3), Graph.empty(1))
    rw, d = rankwidth(g)
    assert rw == 2 and decomposition_width(g, d).width == 2


def test_json_roundtrip_and_validation():
    g = cycle_graph(5)
    _, d = rankwidth(g)
    again = RankDecomposition.from_json(d.to_json())
    assert again == d
    bad = RankDecomposition(d.edges[:-1], d.leaf_map)
    with pytest.raises(StructureError):
        decomposition_width(g, bad)
    with pytest.raises(StructureError):
        decomposition_width(g, RankDecomposition(d.edges, (0, 1, 2, 3)))


def test_internal_degree_checked():
    # leaves 0..3 hung off a single degree-4 node
    d = RankDecomposition(((4, 0), (4, 1), (4, 2), (4, 3)), (0, 1, 2, 3))
    with pytest.raises(StructureError):
        decomposition_width(cycle_graph(4), d)


def test_matches_tree_enumeration():
    rng = random.Random(21)
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 8))
        assert rankwidth_of(g) == rankwidth_oracle(g)


def test_size_cap():
    g = cycle_graph(LIMITS.max_exact_n + 1)
    with pytest.raises(SizeCapExceeded):
        rankwidth(g)
    # the cap is per component
    assert rankwidth_of(disjoint_union(cycle_graph(10), cycle_graph(10))) == 2
    with pytest.raises(SizeCapExceeded):
        rankwidth_at_most(cycle_graph(8), 2, max_n=7)


def test_negative_k():
    assert rankwidth_at_most(cycle_graph(4), -1) == (False, None)


def test_dot_output():
    _, d = rankwidth(path_graph(3))
    assert d.to_dot().startswith("graph T {")
