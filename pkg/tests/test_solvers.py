import random
from itertools import combinations

import pytest

from oracles import (
    max_clique_oracle,
    min_vc_oracle,
    planted_split_instance,
    random_graph,
    random_split_graph,
)
from wsmkit.errors import NotASplitGraph
from wsmkit.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    is_clique,
    is_vertex_cover,
    neighbors_of_set,
    path_graph,
    star_graph,
)
from wsmkit.obstructions import get_obstruction_set
from wsmkit.rankdecomp import rankwidth_of
from wsmkit.solvers import (
    CAP_FALLBACK,
    LOW_RW_FALLBACK,
    WSM_BRANCHING,
    Solution,
    bounded_rw_exact_clq,
    bounded_rw_exact_vc,
    complement_clique_via_vc,
    max_clique,
    min_vertex_cover,
    solve,
    split_graph_min_vc,
)
from wsmkit.split import frontier_of
from wsmkit.wsm import wsn_search

SPLIT = get_obstruction_set("split-graphs")


def test_trivial_instances():
    assert min_vertex_cover(Graph.empty(4), SPLIT).vertices == 0
    assert min_vertex_cover(complete_graph(5), SPLIT).size == 4
    assert max_clique(Graph.empty(3), SPLIT).size == 1
    assert max_clique(complete_graph(5), SPLIT).vertices == 0b11111
    assert max_clique(Graph.empty(0), SPLIT).size == 0


def test_exact_solvers_small():
    assert bounded_rw_exact_vc(path_graph(3)) == 0b010
    assert bounded_rw_exact_vc(cycle_graph(5)).bit_count() == 3
    assert bounded_rw_exact_clq(cycle_graph(5)).bit_count() == 2


def test_exact_solvers_match_oracle():
    rng = random.Random(41)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 12))
        vc, clq = bounded_rw_exact_vc(g), bounded_rw_exact_clq(g)
        assert is_vertex_cover(g, vc) and vc.bit_count() == min_vc_oracle(g)
        assert is_clique(g, clq) and clq.bit_count() == max_clique_oracle(g)


def test_split_graph_solver():
    assert split_graph_min_vc(star_graph(4)) == 0b1
    assert split_graph_min_vc(complete_graph(4)).bit_count() == 3
    with pytest.raises(NotASplitGraph) as info:
        split_graph_min_vc(cycle_graph(4))
    assert info.value.witness is not None
    rng = random.Random(6)
    for _ in range(40):
        g = random_split_graph(rng, rng.randint(0, 6), rng.randint(0, 6), rng.uniform(0.1, 0.9))
        vc = split_graph_min_vc(g)
        assert is_vertex_cover(g, vc) and vc.bit_count() == min_vc_oracle(g)


def test_complement_clique():
    assert complement_clique_via_vc(complete_graph(4)) == 0b1111
    assert complement_clique_via_vc(Graph.empty(3)).bit_count() == 1
    rng = random.Random(13)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10))
        c = complement_clique_via_vc(g)
        assert is_clique(g, c) and c.bit_count() == max_clique_oracle(g)


def test_planted_instances_use_branching():
    rng = random.Random(77)
    for _ in range(4):
        g, gadget = planted_split_instance(rng)
        assert g.n <= 14 and rankwidth_of(g) >= 3
        vc, clq = min_vertex_cover(g, SPLIT), max_clique(g, SPLIT)
        assert vc.path == clq.path == WSM_BRANCHING
        assert vc.signatures_explored == 2 and clq.signatures_explored == 3
        assert is_vertex_cover(g, vc.vertices) and vc.size == min_vc_oracle(g)
        assert is_clique(g, clq.vertices) and clq.size == max_clique_oracle(g)


def test_signature_soundness():
    # every minimum cover contains the frontier A_i or its outside neighbourhood B_i
    rng = random.Random(5)
    for _ in range(3):
        g, _ = planted_split_instance(rng)
        modules = wsn_search(g, SPLIT).modulator.modules
        best = min_vc_oracle(g)
        for cover in combinations(range(g.n), best):
            mask = sum(1 << v for v in cover)
            if not is_vertex_cover(g, mask):
                continue
            for x in modules:
                a = frontier_of(g, x)
                b = neighbors_of_set(g, a) & ~x
                assert a & ~mask == 0 or b & ~mask == 0


def test_low_rw_fallback_and_cap_fallback():
    assert min_vertex_cover(cycle_graph(5), SPLIT).path == LOW_RW_FALLBACK
    g = random_graph(random.Random(1), 12, 0.5)
    sol = min_vertex_cover(g, SPLIT, max_k=0)
    assert sol.path == CAP_FALLBACK and sol.size == min_vc_oracle(g)


def test_decision_mode_and_json():
    sol = solve(cycle_graph(5), "vc", SPLIT)
    assert sol.decide(3) and not sol.decide(2)
    clq = solve(cycle_graph(5), "clique", SPLIT)
    assert clq.decide(2) and not clq.decide(3)
    data = sol.to_json()
    assert set(data) == {"problem", "size", "vertices", "path", "signatures_explored"}
    assert Solution.from_json(data).vertices == sol.vertices
    with pytest.raises(ValueError):
        solve(cycle_graph(5), "coloring", SPLIT)


def test_unregistered_class_uses_exact_solver():
    f = get_obstruction_set("triangle-free")
    rng = random.Random(8)
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 10))
        assert min_vertex_cover(g, f).size == min_vc_oracle(g)
        assert max_clique(g, f).size == max_clique_oracle(g)


def test_complement_of_split_is_split():
    rng = random.Random(2)
    for _ in range(10):
        g = random_split_graph(rng, 4, 5)
        split_graph_min_vc(complement(g))
