import json
from itertools import permutations

import pytest
from hypothesis import HealthCheck, assume, given, settings

from conftest import mixed_graphs, ring
from hermspec.classify import (
    EQ2_TEMPLATES,
    LE2_TEMPLATES,
    FamilyTag,
    Outcome,
    Verdict,
    classify_eq2,
    classify_le2,
    embed_induced,
    radius_consistent,
    smith_membership,
    verify_certificate,
)
from hermspec.families import SignClass, family_member_digits, generate, orient_with_signs
from hermspec.graph import EdgeKind, MixedGraph, disjoint_union, induced_subgraph, is_connected
from hermspec.orient import orient
from hermspec.spectra import Radius, compare_radius
from hermspec.structure import enumerate_cycles, is_c4_free

F, B, U = EdgeKind.FORWARD, EdgeKind.BACKWARD, EdgeKind.UNDIRECTED


def _brute_embed(H, G):
    hadj, gadj = H.adjacency(), G.adjacency()
    for phi in permutations(range(G.n), H.n):
        if all((v in hadj[u]) == (phi[v] in gadj[phi[u]]) for u in range(H.n) for v in range(H.n) if u != v):
            return phi
    return None


@settings(deadline=None, max_examples=60)
@given(mixed_graphs(max_n=4), mixed_graphs(max_n=6))
def test_embed_induced_matches_brute_force(H, G):
    assert embed_induced(H, G) == _brute_embed(H, G)


def test_d1_is_out_of_scope(d1):
    for fn in (classify_le2, classify_eq2):
        v = fn(d1)
        assert v.outcome is Outcome.OUT_OF_SCOPE and "C4" in v.reason


@pytest.mark.parametrize("t", EQ2_TEMPLATES, ids=lambda t: t.tag.value)
def test_eq2_templates_classify_to_their_tag(t):
    target = {c: (t.signclass if t.lengths is None or c.length in t.lengths else SignClass.PLUS) for c in enumerate_cycles(t.graph)}
    D = orient_with_signs(t.graph, target)
    v = classify_eq2(D, crosscheck=True)
    assert v.outcome is Outcome.IN_LIST and v.family_tag is t.tag
    assert v.crosscheck.result is Radius.EXACTLY
    assert verify_certificate(D, v)
    assert classify_le2(D).in_list


@pytest.mark.parametrize("t", LE2_TEMPLATES, ids=lambda t: t.tag.value)
def test_le2_templates_are_closed_under_induced_subgraphs(t):
    rows = family_member_digits(t.graph, t.signclass)
    D = orient(t.graph, rows[0]) if len(rows) else orient_with_signs(
        t.graph, {c: (SignClass.MINUS if c.length == 6 else SignClass.PLUS) for c in enumerate_cycles(t.graph)}
    )
    for v in range(D.n):
        sub = induced_subgraph(D, [w for w in range(D.n) if w != v])
        if not is_connected(sub):
            continue
        verdict = classify_le2(sub)
        assert verdict.in_list
        assert compare_radius(sub).result is not Radius.ABOVE
        assert verify_certificate(sub, verdict)


@pytest.mark.parametrize("n", range(3, 11))
def test_cycles(n):
    pos = ring(n)
    neg = ring(n, [F, F] + [U] * (n - 2))
    imag = ring(n, [F] + [U] * (n - 1))
    if n == 4:
        assert all(classify_eq2(D).outcome is Outcome.OUT_OF_SCOPE for D in (pos, neg, imag))
        return
    assert classify_eq2(pos).family_tag is FamilyTag.CN_PLUS
    assert classify_eq2(neg).in_list == (n % 2 == 1)
    assert not classify_eq2(imag).in_list
    for D in (pos, neg, imag):
        assert classify_le2(D).in_list  # the underlying cycle already has radius 2
        assert radius_consistent(classify_le2(D), classify_eq2(D), compare_radius(D))


def test_smith_trees():
    for spec in ["S(2,2,2)", "S(1,3,3)", "S(1,2,5)", "Y(2,3,2)", "K1,4"]:
        G = generate(spec)
        v = classify_eq2(G)
        assert v.family_tag is FamilyTag.SMITH_TREE and verify_certificate(G, v)
    assert not classify_eq2(generate("P5")).in_list
    assert classify_le2(generate("P5")).family_tag is FamilyTag.SMITH_UNDERLYING


def test_smith_membership():
    assert smith_membership(generate("S(1,2,4)"))[0]  # E8 Dynkin diagram
    assert not smith_membership(generate("S(1,3,4)"))[0]
    assert not smith_membership(generate("Y(3,0,3)"))[0]
    assert smith_membership(MixedGraph(1))[0]


def test_disconnected_reports_components():
    D = disjoint_union(ring(5), generate("S(1,3,4)"))
    v = classify_le2(D)
    assert v.outcome is Outcome.OUT_OF_SCOPE and len(v.components) == 2
    assert [c.in_list for c in v.components] == [True, False]


def test_certificate_rejects_tampering():
    D = ring(5)
    v = classify_eq2(D)
    assert verify_certificate(D, v)
    phi = v.embedding
    swapped = (phi[1], phi[0]) + phi[2:]  # 0 and 4 stay adjacent in D but not in the image
    assert not verify_certificate(D, Verdict(v.outcome, v.family_tag, swapped, v.template))
    assert not verify_certificate(D, Verdict(v.outcome, v.family_tag, (0, 0, 1, 2, 3), v.template))
    assert not verify_certificate(ring(5, [F, U, U, U, U]), v)


def test_verdict_json():
    v = classify_eq2(ring(7), crosscheck=True)
    data = json.loads(v.to_json())
    assert data["outcome"] == "InList" and data["family_tag"] == "Cn_plus"
    assert data["crosscheck"]["result"] == "Exactly"


@settings(deadline=None, max_examples=150, suppress_health_check=[HealthCheck.filter_too_much])
@given(mixed_graphs(min_n=1, max_n=9, connected=True))
def test_biconditionals_on_random_graphs(D):
    assume(is_c4_free(D))
    le2, eq2 = classify_le2(D), classify_eq2(D)
    assert radius_consistent(le2, eq2, compare_radius(D))
    assert verify_certificate(D, le2) and verify_certificate(D, eq2)
