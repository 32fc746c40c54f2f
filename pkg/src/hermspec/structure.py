"""Cycles, cycle values and signs, girth, C4-freeness, and elementary subgraphs.

Cycle enumeration is a plain DFS and is exponential on dense graphs; the graphs studied here
(trees, unicyclic graphs, theta graphs, anything with n <= 12) keep it cheap.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

from .gaussint import GaussInt
from .graph import EdgeKind, MixedGraph


class CycleSign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    IMAG_PLUS = "imag+"
    IMAG_MINUS = "imag-"

    @property
    def is_real(self) -> bool:
        return self in (CycleSign.POSITIVE, CycleSign.NEGATIVE)

    @property
    def is_imaginary(self) -> bool:
        return not self.is_real

    @property
    def real_part(self) -> int:
        """Re h(C): +1, -1, or 0."""
        return {CycleSign.POSITIVE: 1, CycleSign.NEGATIVE: -1}.get(self, 0)

    @classmethod
    def from_exponent(cls, k: int) -> "CycleSign":
        return (cls.POSITIVE, cls.IMAG_PLUS, cls.NEGATIVE, cls.IMAG_MINUS)[k % 4]


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle v1 v2 ... vl v1 in canonical form: v1 minimal, v2 < vl."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"not a simple cycle: {vs}")
        if vs[0] != min(vs) or vs[1] > vs[-1]:
            raise ValueError(f"not in canonical form: {vs} (use Cycle.canonical)")

    @classmethod
    def canonical(cls, walk) -> "Cycle":
        """Canonical form of any rotation/reflection of a vertex cycle."""
        vs = list(walk)
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[1] > vs[-1]:
            vs = [vs[0]] + vs[1:][::-1]
        return cls(tuple(vs))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Traversal steps (a, b) in the canonical direction, closing edge last."""
        vs = self.vertices
        return [(vs[j], vs[(j + 1) % len(vs)]) for j in range(len(vs))]

    def reversed_walk(self) -> tuple[int, ...]:
        return (self.vertices[0],) + tuple(reversed(self.vertices[1:]))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __str__(self) -> str:
        return "".join(f"{v}-" for v in self.vertices) + str(self.vertices[0])


def _edge_map(D: MixedGraph) -> dict[tuple[int, int], int]:
    """(a, b) -> exponent k with H[a][b] = i**k, both directions."""
    out = {}
    for u, v, kind in D.edges:
        k = kind.exponent
        out[(u, v)] = k
        out[(v, u)] = (-k) % 4
    return out


def enumerate_cycles(D: MixedGraph) -> list[Cycle]:
    adj = [sorted(a) for a in D.adjacency()]
    found: list[Cycle] = []
    for s in range(D.n):
        path = [s]
        on_path = [False] * D.n
        on_path[s] = True

        def extend(x: int) -> None:
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    found.append(Cycle(tuple(path)))
                elif y > s and not on_path[y]:
                    on_path[y] = True
                    path.append(y)
                    extend(y)
                    path.pop()
                    on_path[y] = False

        extend(s)
    found.sort(key=lambda c: (c.length, c.vertices))
    return found


def walk_exponent(D: MixedGraph, walk, emap=None) -> int:
    """Exponent k (mod 4) of the closed walk value i**k; the closing step is included."""
    emap = emap if emap is not None else _edge_map(D)
    k = 0
    for j in range(len(walk)):
        step = (walk[j], walk[(j + 1) % len(walk)])
        if step not in emap:
            raise ValueError(f"{step} is not an edge")
        k += emap[step]
    return k % 4


def cycle_value(D: MixedGraph, C: Cycle) -> GaussInt:
    """h(C): product of H entries along the canonical direction."""
    emap = _edge_map(D)
    value = GaussInt(1, 0)
    for step in C.edges():
        if step not in emap:
            raise ValueError(f"{C} is not a cycle of the graph: missing edge {step}")
        value = value * GaussInt.unit(emap[step])
    return value


def classify_cycle(D: MixedGraph, C: Cycle) -> CycleSign:
    return CycleSign.from_exponent(cycle_value(D, C).unit_exponent())


def directed_edge_count(D: MixedGraph, C: Cycle) -> int:
    count = 0
    for a, b in C.edges():
        kind = D.kind(a, b)
        if kind is None:
            raise ValueError(f"{C} is not a cycle of the graph")
        count += kind is not EdgeKind.UNDIRECTED
    return count


def sign_vector(D: MixedGraph, cycles: list[Cycle] | None = None) -> tuple[CycleSign, ...]:
    cycles = enumerate_cycles(D) if cycles is None else cycles
    emap = _edge_map(D)
    return tuple(CycleSign.from_exponent(walk_exponent(D, c.vertices, emap)) for c in cycles)


def girth(D: MixedGraph) -> float:
    """Shortest cycle length of the underlying graph (math.inf for forests), via BFS."""
    adj = D.adjacency()
    best = math.inf
    for s in range(D.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_c4_free(D: MixedGraph) -> bool:
    """No two distinct vertices share two common neighbours (equivalently, no C4 subgraph)."""
    adj = D.adjacency()
    for a in range(D.n):
        for b in range(a + 1, D.n):
            if len(adj[a] & adj[b]) >= 2:
                return False
    return True


@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint union of single edges and cycles."""

    edges: tuple[tuple[int, int], ...]
    cycles: tuple[Cycle, ...]

    @property
    def order(self) -> int:
        return 2 * len(self.edges) + sum(c.length for c in self.cycles)

    @property
    def components(self) -> int:  # t(H)
        return len(self.edges) + len(self.cycles)

    @property
    def cycle_count(self) -> int:  # r(H)
        return len(self.cycles)

    def vertex_set(self) -> frozenset[int]:
        vs = set()
        for u, v in self.edges:
            vs |= {u, v}
        for c in self.cycles:
            vs |= set(c.vertices)
        return frozenset(vs)

    def negative_count(self, D: MixedGraph) -> int:  # s(H)
        return sum(classify_cycle(D, c) is CycleSign.NEGATIVE for c in self.cycles)

    def all_cycles_real(self, D: MixedGraph) -> bool:
        return all(classify_cycle(D, c).is_real for c in self.cycles)


def iter_elementary(
    D: MixedGraph, i: int, real_only: bool = False, cycles: list[Cycle] | None = None
) -> Iterator[ElementarySubgraph]:
    """Lazily yield every elementary subgraph on exactly i vertices.

    With ``real_only`` only those whose cycles are all real (value +-1) are produced.
    """
    if not 0 <= i <= D.n:
        raise ValueError(f"order {i} outside [0, {D.n}]")
    cycles = enumerate_cycles(D) if cycles is None else cycles
    if real_only:
        emap = _edge_map(D)
        cycles = [c for c in cycles if walk_exponent(D, c.vertices, emap) % 2 == 0]
    by_min: list[list[Cycle]] = [[] for _ in range(D.n)]
    for c in cycles:
        by_min[c.vertices[0]].append(c)
    adj = [sorted(a) for a in D.adjacency()]
    used = [False] * D.n
    edges: list[tuple[int, int]] = []
    chosen: list[Cycle] = []

    def rec(v: int, covered: int) -> Iterator[ElementarySubgraph]:
        if covered == i:
            yield ElementarySubgraph(tuple(edges), tuple(chosen))
            return
        if v == D.n or covered + (D.n - v) < i:
            return
        if used[v]:
            yield from rec(v + 1, covered)
            return
        yield from rec(v + 1, covered)
        used[v] = True
        for w in adj[v]:
            if w > v and not used[w] and covered + 2 <= i:
                used[w] = True
                edges.append((v, w))
                yield from rec(v + 1, covered + 2)
                edges.pop()
                used[w] = False
        for c in by_min[v]:
            if covered + c.length <= i and not any(used[x] for x in c.vertices[1:]):
                for x in c.vertices[1:]:
                    used[x] = True
                chosen.append(c)
                yield from rec(v + 1, covered + c.length)
                chosen.pop()
                for x in c.vertices[1:]:
                    used[x] = False
        used[v] = False

    yield from rec(0, 0)


def enumerate_elementary(D: MixedGraph, i: int, real_only: bool = False) -> list[ElementarySubgraph]:
    return list(iter_elementary(D, i, real_only))
