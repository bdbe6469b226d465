from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cut_rank_oracle
from wsmkit.gf2 import cut_rank
from wsmkit.graph import Graph, is_clique, is_vertex_cover
from wsmkit.io import format_dimacs, format_edge_list, parse_dimacs, parse_edge_list
from wsmkit.obstructions import get_obstruction_set
from wsmkit.solvers import Solution, max_clique, min_vertex_cover
from wsmkit.split import SplitTree, accessibility_graph, build_split_tree

SPLIT = get_obstruction_set("split-graphs")


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_cut_rank_symmetric(g, data):
    side = data.draw(st.integers(0, (1 << g.n) - 1))
    rest = g.vertices & ~side
    assert cut_rank(g, side) == cut_rank(g, rest) == cut_rank_oracle(g, {v for v in range(g.n) if side >> v & 1})


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_split_tree_accessibility(g):
    t = build_split_tree(g)
    assert accessibility_graph(t) == g
    assert accessibility_graph(SplitTree.from_json(t.to_json())) == g


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_solutions_valid(g):
    vc = min_vertex_cover(g, SPLIT)
    clq = max_clique(g, SPLIT)
    assert is_vertex_cover(g, vc.vertices)
    assert is_clique(g, clq.vertices)
    assert Solution.from_json(vc.to_json()).to_json() == vc.to_json()


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_formats_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_dimacs(format_dimacs(g)) == g
