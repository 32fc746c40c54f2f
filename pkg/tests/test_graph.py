import pytest
from hypothesis import given

from conftest import D1_TEXT, mixed_graphs
from hermspec.graph import (
    EdgeKind,
    GraphError,
    MixedGraph,
    ParseError,
    attach_pendant,
    components,
    delete_edge,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_tree,
    parse_mixed_graph,
    relabel,
    serialize,
    underlying,
)


def test_parse_d1(d1):
    assert d1.n == 4 and d1.m == 5
    assert d1.kind(1, 2) is EdgeKind.FORWARD
    assert d1.kind(2, 1) is EdgeKind.BACKWARD
    assert d1.kind(0, 1) is EdgeKind.UNDIRECTED
    assert d1.kind(0, 2) is None


def test_backward_arc_is_stored_canonically():
    D = parse_mixed_graph("v 2\n1 -> 0\n")
    assert D.edges == ((0, 1, EdgeKind.BACKWARD),)
    assert serialize(D) == "v 2\n1 -> 0\n"


@given(mixed_graphs())
def test_serialize_roundtrip(D):
    assert parse_mixed_graph(serialize(D)) == D


def test_comments_and_blank_lines():
    D = parse_mixed_graph("# fixture\n\nv 3\n0 -- 1\n\n# arc\n1 -> 2\n")
    assert D.m == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("v 2\n0 -- 2\n", 2),
        ("v 2\n0 -- 0\n", 2),
        ("v 3\n0 -- 1\n1 -> 0\n", 3),
        ("v 2\n0 => 1\n", 2),
        ("0 -- 1\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_mixed_graph(text)
    assert exc.value.line == line


def test_missing_header():
    with pytest.raises(ParseError):
        parse_mixed_graph("")


def test_constructor_validates():
    with pytest.raises(GraphError):
        MixedGraph(2, ((1, 0, EdgeKind.UNDIRECTED),))
    with pytest.raises(GraphError):
        MixedGraph.build(2, [(1, 1)])


@given(mixed_graphs(min_n=1))
def test_delete_vertex_map(D):
    v = D.n // 2
    E, index = delete_vertex(D, v)
    assert E.n == D.n - 1
    assert E.m == D.m - len(D.adjacency()[v])
    for a, b, k in D.edges:
        if v not in (a, b):
            assert E.kind(index[a], index[b]) is k


def test_delete_edge(d1):
    E = delete_edge(d1, 3, 2)
    assert E.m == 4 and not E.has_edge(2, 3)
    with pytest.raises(GraphError):
        delete_edge(E, 2, 3)


def test_induced_subgraph_relabels_in_order(d1):
    S = induced_subgraph(d1, [1, 2, 3])
    assert S.edges == ((0, 1, EdgeKind.FORWARD), (0, 2, EdgeKind.UNDIRECTED), (1, 2, EdgeKind.FORWARD))


def test_attach_pendant_direction():
    D = attach_pendant(MixedGraph(2, ((0, 1, EdgeKind.UNDIRECTED),)), 1, EdgeKind.BACKWARD)
    assert D.n == 3 and D.kind(2, 1) is EdgeKind.FORWARD


@given(mixed_graphs(), mixed_graphs())
def test_disjoint_union_components(A, B):
    U = disjoint_union(A, B)
    assert U.n == A.n + B.n and U.m == A.m + B.m
    assert len(components(U)) == len(components(A)) + len(components(B))


def test_connectivity_and_trees(d1):
    assert is_connected(d1) and not is_tree(d1)
    assert is_connected(MixedGraph(0))
    assert not is_connected(MixedGraph(2))
    assert is_tree(MixedGraph.build(3, [(0, 1), (1, 2)]))


@given(mixed_graphs())
def test_relabel_reverse_keeps_kinds_along_pairs(D):
    perm = list(reversed(range(D.n)))
    R = relabel(D, perm)
    for u, v, k in D.edges:
        assert R.kind(perm[u], perm[v]) is k


def test_underlying_forgets_direction():
    D = parse_mixed_graph(D1_TEXT)
    assert underlying(D).is_undirected() and underlying(D).pairs() == D.pairs()
