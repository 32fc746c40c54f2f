import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermspec.canon import are_isomorphic
from hermspec.families import (
    CycleWithPaths,
    Dumbbell,
    FamilyError,
    SignClass,
    StarLike,
    Theta,
    Unrealizable,
    Y,
    enumerate_family_members,
    generate,
    orient_with_signs,
    parse_family,
    smith_graphs,
    smith_templates,
)
from hermspec.graph import MixedGraph, is_connected, is_tree
from hermspec.spectra import Radius, compare_radius
from hermspec.structure import CycleSign, enumerate_cycles, is_c4_free, sign_vector


@pytest.mark.parametrize(
    "text, n, m",
    [
        ("P7", 7, 6),
        ("C5", 5, 5),
        ("C6(1,0,1,0,1)", 9, 9),
        ("C6(2,0,0,2)", 10, 10),
        ("K1,4", 5, 4),
        ("S(1,2,5)", 9, 8),
        ("Y(2,1,2)", 6, 5),
        ("D(3,4,2)", 7, 8),
        ("D(3,3,3)", 7, 8),
        ("theta(3,5,5)", 9, 10),
    ],
)
def test_sizes(text, n, m):
    G = generate(text)
    assert (G.n, G.m) == (n, m) and is_connected(G)


@pytest.mark.parametrize("text", ["P7", "C5", "C6(1,0,1,0,1)", "S(1,2,5)", "Y(3,0,3)", "D(3,4,2)", "theta(3,5,5)", "K1,4"])
def test_str_roundtrip(text):
    assert str(parse_family(text)) == text


@pytest.mark.parametrize("text", ["Q3", "C2", "theta(2,2,5)", "Y(1,0,2)", "D(3,3,1)", "C3(1,1,1,1)", "Y(2,2)", "S()"])
def test_rejects(text):
    with pytest.raises(FamilyError):
        parse_family(text)


def test_padding_is_canonical():
    assert CycleWithPaths(6, (2, 0, 0, 2)) == CycleWithPaths(6, (2, 0, 0, 2, 0, 0))
    assert str(CycleWithPaths(5, (0, 0))) == "C5"


def test_theta_cycles():
    assert sorted(c.length for c in enumerate_cycles(Theta(3, 5, 5).generate())) == [6, 6, 8]
    assert len(enumerate_cycles(Theta(2, 3, 4).generate())) == 3


@given(st.integers(2, 6), st.integers(0, 4), st.integers(2, 6))
def test_y_is_a_tree_with_two_branch_vertices(r, s, t):
    G = Y(r, s, t).generate()
    assert is_tree(G) and G.n == r + s + t + 1
    top = sorted(G.degrees())[-2:]
    if s > 0:
        assert top == [3, 3]
    else:
        assert top[-1] == 4 and top[0] == (2 if r + t > 4 else 1)


@given(st.integers(3, 6), st.integers(3, 6), st.integers(2, 4))
def test_dumbbell_shape(r, s, t):
    G = Dumbbell(r, s, t).generate()
    assert sorted(c.length for c in enumerate_cycles(G)) == sorted([r, s])
    assert G.m == G.n + 1


@pytest.mark.parametrize("n", range(3, 13))
def test_smith_graphs_have_radius_two(n):
    graphs = smith_graphs(n)
    assert graphs
    for G in graphs:
        assert compare_radius(G).result is Radius.EXACTLY
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            assert not are_isomorphic(graphs[a], graphs[b])


def test_smith_inventory():
    names = {n: sorted(str(s) for s, _ in smith_templates(n)) for n in (5, 7, 8, 9)}
    assert names[5] == ["C5", "Y(2,0,2)"]  # K1,4 appears as Y(2,0,2)
    assert names[7] == ["C7", "S(2,2,2)", "Y(2,2,2)"]
    assert names[8] == ["C8", "S(1,3,3)", "Y(2,3,2)"]
    assert names[9] == ["C9", "S(1,2,5)", "Y(2,4,2)"]


@pytest.mark.parametrize("spec", ["C3(2)", "C6(1,0,1,0,1)", "C6(2,0,0,2)", "theta(3,5,5)"])
@pytest.mark.parametrize("sc", list(SignClass))
def test_orient_with_signs_matches_enumeration(spec, sc):
    G = generate(spec)
    members = enumerate_family_members(G, sc)
    target = {c: sc for c in enumerate_cycles(G)}
    if members:
        D = orient_with_signs(G, target)
        assert D == members[0]  # both give the lexicographically least orientation
        assert all(sc.admits(s) for s in sign_vector(D))
    else:
        with pytest.raises(Unrealizable):
            orient_with_signs(G, target)


def test_theta_sign_constraint():
    """The three cycle values of a theta graph multiply to a real number of the form h h' conj(h'')."""
    G = Theta(3, 5, 5).generate()
    assert enumerate_family_members(G, SignClass.MINUS) == []
    assert enumerate_family_members(G, SignClass.STAR) == []
    cycles = enumerate_cycles(G)
    target = {c: SignClass.MINUS if c.length == 6 else SignClass.PLUS for c in cycles}
    D = orient_with_signs(G, target)
    assert sorted((c.length, s) for c, s in zip(cycles, sign_vector(D)))[:2] == [(6, CycleSign.NEGATIVE)] * 2


def test_member_counts_for_a_cycle():
    # C_n: 3^n orientations, split by h(C) in {1, i, -1, -i}
    members = {sc: len(enumerate_family_members("C4", sc)) for sc in SignClass}
    assert sum(members.values()) == 81
    assert members[SignClass.STAR] == 40


def test_sporadic_trees_are_c4_free_trees():
    for arms in ((2, 2, 2), (1, 3, 3), (1, 2, 5)):
        G = StarLike(arms).generate()
        assert is_tree(G) and is_c4_free(G)


def test_orient_with_signs_rejects_directed_input():
    G = MixedGraph.from_arcs(3, arcs=[(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        orient_with_signs(G, {})
