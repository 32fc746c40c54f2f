"""Structural decision procedures for connected C4-free mixed graphs with rho <= 2 and rho = 2.

A verdict is certified by an induced embedding of the underlying graph into an undirected
template plus the signs of the input's own cycles. Orientations of one underlying graph with the
same cycle signs are cospectral, so no mixed-graph isomorphism is needed.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .canon import are_isomorphic
from .families import CycleWithPaths, SignClass, Theta, smith_templates
from .graph import MixedGraph, components, induced_subgraph, is_connected, is_tree, underlying
from .spectra import Radius, RadiusComparison, compare_radius
from .structure import CycleSign, enumerate_cycles, is_c4_free, sign_vector


class Outcome(enum.Enum):
    IN_LIST = "InList"
    NOT_IN_LIST = "NotInList"
    OUT_OF_SCOPE = "OutOfScope"


class FamilyTag(enum.Enum):
    # rho <= 2
    SMITH_UNDERLYING = "SmithUnderlying"
    C3_2_STAR_HAT = "C3_2_star_hat"
    C6_10101_MINUS_HAT = "C6_10101_minus_hat"
    C6_2002_MINUS_HAT = "C6_2002_minus_hat"
    C8_10001_MINUS_HAT = "C8_10001_minus_hat"
    THETA355_TWO_NEG_C6 = "Theta355_twoNegC6"
    # rho = 2
    SMITH_TREE = "SmithTree"
    CN_PLUS = "Cn_plus"
    CN_MINUS_ODD = "Cn_minus_odd"
    C3_2_STAR = "C3_2_star"
    C6_101_MINUS = "C6_101_minus"
    C6_10101_MINUS = "C6_10101_minus"
    C6_2_MINUS = "C6_2_minus"
    C6_2001_MINUS = "C6_2001_minus"
    C6_2002_MINUS = "C6_2002_minus"
    C8_1_MINUS = "C8_1_minus"
    C8_10001_MINUS = "C8_10001_minus"


@dataclass(frozen=True)
class Template:
    tag: FamilyTag
    graph: MixedGraph
    signclass: SignClass
    # only cycles of these lengths are constrained (None: every cycle)
    lengths: Optional[frozenset[int]] = None

    def admits(self, D: MixedGraph) -> bool:
        for c, s in zip(enumerate_cycles(D), sign_vector(D)):
            if self.lengths is not None and c.length not in self.lengths:
                continue
            if not self.signclass.admits(s):
                return False
        return True


def _cwp(n, *ks):
    return CycleWithPaths(n, ks).generate()


LE2_TEMPLATES = (
    Template(FamilyTag.C3_2_STAR_HAT, _cwp(3, 2), SignClass.STAR),
    Template(FamilyTag.C6_10101_MINUS_HAT, _cwp(6, 1, 0, 1, 0, 1), SignClass.MINUS),
    Template(FamilyTag.C6_2002_MINUS_HAT, _cwp(6, 2, 0, 0, 2), SignClass.MINUS),
    Template(FamilyTag.C8_10001_MINUS_HAT, _cwp(8, 1, 0, 0, 0, 1), SignClass.MINUS),
    # in theta(3,5,5) two negative hexagons force the octagon positive
    Template(FamilyTag.THETA355_TWO_NEG_C6, Theta(3, 5, 5).generate(), SignClass.MINUS, frozenset({6})),
)

EQ2_TEMPLATES = (
    Template(FamilyTag.C3_2_STAR, _cwp(3, 2), SignClass.STAR),
    Template(FamilyTag.C6_101_MINUS, _cwp(6, 1, 0, 1), SignClass.MINUS),
    Template(FamilyTag.C6_10101_MINUS, _cwp(6, 1, 0, 1, 0, 1), SignClass.MINUS),
    Template(FamilyTag.C6_2_MINUS, _cwp(6, 2), SignClass.MINUS),
    Template(FamilyTag.C6_2001_MINUS, _cwp(6, 2, 0, 0, 1), SignClass.MINUS),
    Template(FamilyTag.C6_2002_MINUS, _cwp(6, 2, 0, 0, 2), SignClass.MINUS),
    Template(FamilyTag.C8_1_MINUS, _cwp(8, 1), SignClass.MINUS),
    Template(FamilyTag.C8_10001_MINUS, _cwp(8, 1, 0, 0, 0, 1), SignClass.MINUS),
    Template(FamilyTag.THETA355_TWO_NEG_C6, Theta(3, 5, 5).generate(), SignClass.MINUS, frozenset({6})),
)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    family_tag: Optional[FamilyTag] = None
    embedding: Optional[tuple[int, ...]] = None  # template vertex per input vertex
    template: Optional[str] = None
    reason: str = ""
    crosscheck: Optional[RadiusComparison] = None
    components: tuple["Verdict", ...] = field(default=())

    @property
    def in_list(self) -> bool:
        return self.outcome is Outcome.IN_LIST

    def to_dict(self) -> dict:
        out = {
            "outcome": self.outcome.value,
            "family_tag": self.family_tag.value if self.family_tag else None,
            "embedding": list(self.embedding) if self.embedding is not None else None,
            "template": self.template,
            "reason": self.reason,
            "crosscheck": self.crosscheck.to_dict() if self.crosscheck else None,
        }
        if self.components:
            out["components"] = [c.to_dict() for c in self.components]
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


@lru_cache(maxsize=200_000)
def embed_induced(H: MixedGraph, G: MixedGraph) -> Optional[tuple[int, ...]]:
    """First injective map (lexicographic backtracking) under which H is an induced subgraph of G.

    Only the underlying graphs matter; edge kinds are ignored.
    """
    if H.n > G.n:
        return None
    hadj, gadj = H.adjacency(), G.adjacency()
    hdeg, gdeg = H.degrees(), G.degrees()
    phi: list[int] = []
    used = [False] * G.n

    def rec(v: int) -> bool:
        if v == H.n:
            return True
        for w in range(G.n):
            if used[w] or gdeg[w] < hdeg[v]:
                continue
            if all((u in hadj[v]) == (phi[u] in gadj[w]) for u in range(v)):
                phi.append(w)
                used[w] = True
                if rec(v + 1):
                    return True
                phi.pop()
                used[w] = False
        return False

    return tuple(phi) if rec(0) else None


def smith_membership(G: MixedGraph) -> tuple[bool, Optional[str], Optional[tuple[int, ...]]]:
    """Is the (connected) underlying graph of G an induced subgraph of a Smith graph?

    Returns (member, template name, embedding). Templates on |V| and |V|+1 vertices cover
    every tree with spectral radius at most 2; cycles match C_n directly.
    """
    G = underlying(G)
    if G.n == 0:
        return True, None, ()
    for k in range(G.n, max(G.n + 1, 3) + 1):
        for spec, T in smith_templates(k):
            phi = embed_induced(G, T)
            if phi is not None:
                return True, str(spec), phi
    return False, None, None


def _scope_problem(D: MixedGraph) -> Optional[str]:
    if not is_connected(D):
        return "disconnected"
    if not is_c4_free(D):
        return "underlying graph contains C4"
    return None


def _per_component(D: MixedGraph, fn: Callable[[MixedGraph, bool], Verdict], reason: str, crosscheck: bool) -> Verdict:
    parts = tuple(fn(induced_subgraph(D, comp), False) for comp in components(D))
    summary = "all components in list" if all(p.in_list for p in parts) else "some component not in list"
    return Verdict(
        Outcome.OUT_OF_SCOPE,
        reason=f"{reason}; {summary}",
        crosscheck=compare_radius(D) if crosscheck else None,
        components=parts,
    )


def classify_le2(D: MixedGraph, crosscheck: bool = False) -> Verdict:
    """Membership in the list for connected C4-free mixed graphs with rho <= 2."""
    cc = compare_radius(D) if crosscheck else None
    problem = _scope_problem(D)
    if problem == "disconnected":
        if is_c4_free(D):
            return _per_component(D, classify_le2, problem, crosscheck)
        return Verdict(Outcome.OUT_OF_SCOPE, reason="disconnected; underlying graph contains C4", crosscheck=cc)
    if problem:
        return Verdict(Outcome.OUT_OF_SCOPE, reason=problem, crosscheck=cc)
    G = underlying(D)
    member, name, phi = smith_membership(G)
    if member:
        return Verdict(Outcome.IN_LIST, FamilyTag.SMITH_UNDERLYING, phi, name, "underlying graph is a Smith graph or induced subgraph of one", cc)
    for t in LE2_TEMPLATES:
        phi = embed_induced(G, t.graph)
        if phi is not None and t.admits(D):
            return Verdict(Outcome.IN_LIST, t.tag, phi, t.tag.value, "induced in template with required cycle signs", cc)
    return Verdict(Outcome.NOT_IN_LIST, reason="no template admits the graph", crosscheck=cc)


def classify_eq2(D: MixedGraph, crosscheck: bool = False) -> Verdict:
    """Membership in the list for C4-free mixed graphs with rho exactly 2."""
    cc = compare_radius(D) if crosscheck else None
    problem = _scope_problem(D)
    if problem == "disconnected":
        if is_c4_free(D):
            return _per_component(D, classify_eq2, problem, crosscheck)
        return Verdict(Outcome.OUT_OF_SCOPE, reason="disconnected; underlying graph contains C4", crosscheck=cc)
    if problem:
        return Verdict(Outcome.OUT_OF_SCOPE, reason=problem, crosscheck=cc)
    G = underlying(D)
    if is_tree(G):
        for spec, T in smith_templates(G.n):
            if T.m == G.m and are_isomorphic(G, T):
                return Verdict(Outcome.IN_LIST, FamilyTag.SMITH_TREE, embed_induced(G, T), str(spec), "Smith tree", cc)
        return Verdict(Outcome.NOT_IN_LIST, reason="tree that is not a Smith tree", crosscheck=cc)
    cycles = enumerate_cycles(D)
    if len(cycles) == 1 and cycles[0].length == D.n:
        sign = sign_vector(D, cycles)[0]
        phi = tuple(cycles[0].vertices.index(v) for v in range(D.n))
        if sign is CycleSign.POSITIVE:
            return Verdict(Outcome.IN_LIST, FamilyTag.CN_PLUS, phi, f"C{D.n}", "positive cycle", cc)
        if sign is CycleSign.NEGATIVE and D.n % 2 == 1:
            return Verdict(Outcome.IN_LIST, FamilyTag.CN_MINUS_ODD, phi, f"C{D.n}", "negative odd cycle", cc)
        return Verdict(Outcome.NOT_IN_LIST, reason=f"{sign.value} cycle of length {D.n}", crosscheck=cc)
    for t in EQ2_TEMPLATES:
        if t.graph.n == G.n and t.graph.m == G.m and are_isomorphic(G, t.graph) and t.admits(D):
            return Verdict(Outcome.IN_LIST, t.tag, embed_induced(G, t.graph), t.tag.value, "isomorphic to template with required cycle signs", cc)
    return Verdict(Outcome.NOT_IN_LIST, reason="no template matches exactly", crosscheck=cc)


def verify_certificate(D: MixedGraph, verdict: Verdict) -> bool:
    """Re-check an InList verdict from scratch: injective induced embedding and cycle signs.

    Tags from the rho = 2 list additionally need the embedding to be onto the template.
    """
    if not verdict.in_list:
        return True
    tag = verdict.family_tag
    phi = verdict.embedding
    if tag in (FamilyTag.CN_PLUS, FamilyTag.CN_MINUS_ODD):
        n = D.n
        ring = MixedGraph.build(n, [(j, (j + 1) % n) for j in range(n)])
        s = sign_vector(D)
        want = CycleSign.POSITIVE if tag is FamilyTag.CN_PLUS else CycleSign.NEGATIVE
        return (
            _is_induced_embedding(D, ring, phi)
            and len(s) == 1
            and s[0] is want
            and (want is CycleSign.POSITIVE or n % 2 == 1)
        )
    if tag in (FamilyTag.SMITH_UNDERLYING, FamilyTag.SMITH_TREE):
        sizes = [D.n] if tag is FamilyTag.SMITH_TREE else range(D.n, max(D.n + 1, 3) + 1)
        for k in sizes:
            for spec, T in smith_templates(k):
                if str(spec) == verdict.template and _is_induced_embedding(D, T, phi):
                    return tag is FamilyTag.SMITH_UNDERLYING or T.m == D.m
        return False
    le2_tags = {t.tag for t in LE2_TEMPLATES}
    for t in LE2_TEMPLATES + EQ2_TEMPLATES:
        if t.tag is not tag:
            continue
        onto = t.graph.n == D.n and t.graph.m == D.m
        if (tag in le2_tags or onto) and _is_induced_embedding(D, t.graph, phi) and t.admits(D):
            return True
    return False


def _is_induced_embedding(D: MixedGraph, T: MixedGraph, phi) -> bool:
    if phi is None or len(phi) != D.n or len(set(phi)) != D.n or any(not 0 <= x < T.n for x in phi):
        return False
    tadj = T.adjacency()
    dadj = D.adjacency()
    return all((v in dadj[u]) == (phi[v] in tadj[phi[u]]) for u in range(D.n) for v in range(D.n) if u != v)


def radius_consistent(verdict_le2: Verdict, verdict_eq2: Verdict, comparison: RadiusComparison) -> bool:
    """The two biconditionals tying verdicts to the exact radius decision."""
    le2_ok = verdict_le2.in_list == (comparison.result is not Radius.ABOVE)
    eq2_ok = verdict_eq2.in_list == (comparison.result is Radius.EXACTLY)
    return le2_ok and eq2_ok
