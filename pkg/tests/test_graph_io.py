import pytest

from wsmkit.errors import GraphParseError
from wsmkit.graph import (
    Graph,
    as_mask,
    canonical_form,
    complement,
    complete_graph,
    connected_components,
    contains_induced,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_clique,
    is_vertex_cover,
    path_graph,
    relabel,
    star_graph,
)
from wsmkit.io import (
    format_dimacs,
    format_dot,
    format_edge_list,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    parse_dimacs,
    parse_edge_list,
)


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_basic_queries():
    g = path_graph(4)
    assert g.m == 3 and g.degree(1) == 2 and g.has_edge(2, 3) and not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert as_mask([0, 3]) == 0b1001


def test_induced_subgraph_reindexes_in_order():
    h, index = induced_subgraph(cycle_graph(5), [4, 0, 1])
    assert index == {0: 0, 1: 1, 4: 2}
    assert sorted(h.edges()) == [(0, 1), (0, 2)]


def test_components_and_complement():
    g = disjoint_union(complete_graph(2), path_graph(3), Graph.empty(1))
    assert connected_components(g) == [0b11, 0b11100, 0b100000]
    assert complement(complement(g)) == g
    assert complement(complete_graph(4)).m == 0


def test_contains_induced():
    assert contains_induced(complete_graph(4), complete_graph(3)) is not None
    assert contains_induced(cycle_graph(5), complete_graph(3)) is None
    # C4 has two disjoint edges, but never as an induced 2K2
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert contains_induced(cycle_graph(4), two_k2) is None
    emb = contains_induced(path_graph(5), two_k2)
    assert emb is not None
    for u, v in [(0, 1), (2, 3)]:
        assert path_graph(5).has_edge(emb[u], emb[v])


def test_canonical_form_is_isomorphism_invariant():
    g = star_graph(3)
    assert canonical_form(g) == canonical_form(relabel(g, [3, 1, 2, 0]))
    assert canonical_form(g) != canonical_form(path_graph(4))


def test_cover_and_clique_checks():
    g = cycle_graph(4)
    assert is_vertex_cover(g, [0, 2]) and not is_vertex_cover(g, [0, 1])
    assert is_clique(g, [0, 1]) and not is_clique(g, [0, 2])


def test_edge_list_roundtrip():
    g = cycle_graph(5)
    assert parse_edge_list(format_edge_list(g)) == g
    text = "# comment\n3 2\n\n0 1\n1 2\n"
    assert parse_edge_list(text) == path_graph(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n0 1\n", 1),
        ("3 1\n0 5\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2\n", 2),
    ],
)
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_dimacs():
    g = parse_dimacs("c hi\np edge 3 2\ne 1 2\ne 2 3\ne 2 1\n")
    assert g == path_graph(3)
    assert parse_dimacs(format_dimacs(cycle_graph(5))) == cycle_graph(5)
    with pytest.raises(GraphParseError) as info:
        parse_dimacs("p edge 2 1\ne 1 3\n")
    assert info.value.line == 2


def test_load_graph_detects_format(tmp_path):
    a = tmp_path / "g.col"
    a.write_text(format_dimacs(cycle_graph(4)))
    b = tmp_path / "g.edges"
    b.write_text(format_edge_list(cycle_graph(4)))
    assert load_graph(a) == load_graph(b) == cycle_graph(4)


def test_dict_and_dot():
    g = star_graph(2)
    assert graph_from_dict(graph_to_dict(g)) == g
    assert graph_from_dict("2 1\n0 1\n") == complete_graph(2)
    assert "0 -- 1;" in format_dot(g)
