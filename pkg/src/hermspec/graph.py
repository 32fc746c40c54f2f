"""Mixed graphs: vertices 0..n-1 plus undirected edges and arcs on a simple underlying graph.

The ``.mg`` text format::

    # optional comments
    v 4
    0 -- 1      undirected edge
    1 -> 2      arc 1 -> 2

Every operation returns a new graph; ``MixedGraph`` values are immutable and hashable.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class EdgeKind(enum.Enum):
    UNDIRECTED = "--"
    FORWARD = "->"  # arc u -> v
    BACKWARD = "<-"  # arc v -> u

    def reversed(self) -> "EdgeKind":
        if self is EdgeKind.FORWARD:
            return EdgeKind.BACKWARD
        if self is EdgeKind.BACKWARD:
            return EdgeKind.FORWARD
        return self

    @property
    def exponent(self) -> int:
        """Power of i stored at H[u][v] for an edge (u, v, kind)."""
        return _EXPONENT[self]


_EXPONENT = {EdgeKind.UNDIRECTED: 0, EdgeKind.FORWARD: 1, EdgeKind.BACKWARD: 3}

# orientation digit convention shared with the enumeration kernels
KIND_BY_DIGIT = (EdgeKind.UNDIRECTED, EdgeKind.FORWARD, EdgeKind.BACKWARD)
DIGIT_BY_KIND = {k: d for d, k in enumerate(KIND_BY_DIGIT)}


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


Edge = tuple[int, int, EdgeKind]


def _canonical_edge(u: int, v: int, kind: EdgeKind) -> Edge:
    if u < v:
        return (u, v, kind)
    return (v, u, kind.reversed())


@dataclass(frozen=True)
class MixedGraph:
    """A simple mixed graph.

    Edges are stored with ``u < v``; an arc v -> u is kept as ``(u, v, BACKWARD)``.
    Construct through :meth:`build` unless the edge list is already canonical and sorted.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for u, v, kind in self.edges:
            if not isinstance(kind, EdgeKind):
                raise GraphError(f"bad edge kind {kind!r}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"vertex index out of range in edge ({u}, {v})")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not in canonical form u < v")
            if (u, v) in seen:
                raise GraphError(f"duplicate pair {{{u}, {v}}}")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges, key=lambda e: (e[0], e[1])):
            raise GraphError("edges must be sorted by (u, v)")

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int] | tuple[int, int, EdgeKind]] = ()) -> "MixedGraph":
        """Canonicalize and sort an arbitrary edge list. Pairs without a kind are undirected."""
        out = []
        for e in edges:
            if len(e) == 2:
                u, v = e
                kind = EdgeKind.UNDIRECTED
            else:
                u, v, kind = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            out.append(_canonical_edge(u, v, kind))
        out.sort(key=lambda e: (e[0], e[1]))
        return cls(n, tuple(out))

    @classmethod
    def from_arcs(cls, n: int, undirected: Iterable[tuple[int, int]] = (), arcs: Iterable[tuple[int, int]] = ()):
        edges = [(u, v, EdgeKind.UNDIRECTED) for u, v in undirected]
        edges += [(u, v, EdgeKind.FORWARD) for u, v in arcs]
        return cls.build(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def kind(self, u: int, v: int) -> EdgeKind | None:
        """Kind of the edge read in the direction u -> v, or None when u, v are not adjacent."""
        a, b = (u, v) if u < v else (v, u)
        for x, y, k in self.edges:
            if x == a and y == b:
                return k if u < v else k.reversed()
        return None

    def has_edge(self, u: int, v: int) -> bool:
        return self.kind(u, v) is not None

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_undirected(self) -> bool:
        return all(k is EdgeKind.UNDIRECTED for _, _, k in self.edges)

    def with_kinds(self, kinds: Sequence[EdgeKind]) -> "MixedGraph":
        """Same edge pairs, kinds replaced positionally."""
        if len(kinds) != self.m:
            raise GraphError("kind list length differs from edge count")
        return MixedGraph(self.n, tuple((u, v, k) for (u, v, _), k in zip(self.edges, kinds)))

    def orientation_digits(self) -> tuple[int, ...]:
        return tuple(DIGIT_BY_KIND[k] for _, _, k in self.edges)

    def __str__(self) -> str:
        return serialize(self)


def parse_mixed_graph(text: str) -> MixedGraph:
    n = None
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "v" or not tokens[1].isdigit():
                raise ParseError(f"expected 'v <n>', got {line!r}", lineno)
            n = int(tokens[1])
            continue
        if len(tokens) != 3 or tokens[1] not in ("--", "->") or not (tokens[0].isdigit() and tokens[2].isdigit()):
            raise ParseError(f"expected 'a -- b' or 'a -> b', got {line!r}", lineno)
        a, b = int(tokens[0]), int(tokens[2])
        if a >= n or b >= n:
            raise ParseError(f"vertex index >= n={n}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate pair {{{a}, {b}}} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        kind = EdgeKind.UNDIRECTED if tokens[1] == "--" else EdgeKind.FORWARD
        edges.append(_canonical_edge(a, b, kind))
    if n is None:
        raise ParseError("missing 'v <n>' header")
    edges.sort(key=lambda e: (e[0], e[1]))
    return MixedGraph(n, tuple(edges))


def serialize(D: MixedGraph) -> str:
    lines = [f"v {D.n}"]
    for u, v, kind in D.edges:
        if kind is EdgeKind.UNDIRECTED:
            lines.append(f"{u} -- {v}")
        elif kind is EdgeKind.FORWARD:
            lines.append(f"{u} -> {v}")
        else:
            lines.append(f"{v} -> {u}")
    return "\n".join(lines) + "\n"


def underlying(D: MixedGraph) -> MixedGraph:
    if D.is_undirected():
        return D
    return MixedGraph(D.n, tuple((u, v, EdgeKind.UNDIRECTED) for u, v, _ in D.edges))


def induced_subgraph(D: MixedGraph, S: Iterable[int]) -> MixedGraph:
    """Subgraph induced on S; the vertex ``sorted(S)[j]`` becomes j."""
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < D.n:
            raise GraphError(f"vertex {v} out of range")
    index = {v: j for j, v in enumerate(keep)}
    edges = [(index[u], index[v], k) for u, v, k in D.edges if u in index and v in index]
    # order-preserving relabel keeps u < v and the sort order
    return MixedGraph(len(keep), tuple(edges))


def delete_vertex(D: MixedGraph, v: int) -> tuple[MixedGraph, dict[int, int]]:
    """Remove v; returns the new graph and the map old vertex -> new vertex."""
    if not 0 <= v < D.n:
        raise GraphError(f"vertex {v} out of range")
    keep = [w for w in range(D.n) if w != v]
    return induced_subgraph(D, keep), {w: j for j, w in enumerate(keep)}


def delete_vertices(D: MixedGraph, vs: Iterable[int]) -> MixedGraph:
    drop = set(vs)
    return induced_subgraph(D, [w for w in range(D.n) if w not in drop])


def delete_edge(D: MixedGraph, u: int, v: int) -> MixedGraph:
    a, b = min(u, v), max(u, v)
    rest = tuple(e for e in D.edges if (e[0], e[1]) != (a, b))
    if len(rest) == len(D.edges):
        raise GraphError(f"no edge {{{u}, {v}}}")
    return MixedGraph(D.n, rest)


def add_edge(D: MixedGraph, u: int, v: int, kind: EdgeKind = EdgeKind.UNDIRECTED) -> MixedGraph:
    return MixedGraph.build(D.n, list(D.edges) + [(u, v, kind)])


def attach_pendant(D: MixedGraph, u: int, kind: EdgeKind = EdgeKind.UNDIRECTED) -> MixedGraph:
    """Add a new vertex n joined to u; ``kind`` is read in the direction u -> new."""
    return MixedGraph.build(D.n + 1, list(D.edges) + [(u, D.n, kind)])


def disjoint_union(*graphs: MixedGraph) -> MixedGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset, k) for u, v, k in g.edges]
        offset += g.n
    return MixedGraph.build(offset, edges)


def components(D: MixedGraph) -> list[list[int]]:
    adj = D.adjacency()
    seen = [False] * D.n
    out = []
    for s in range(D.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(D: MixedGraph) -> bool:
    return D.n == 0 or len(components(D)) == 1


def is_tree(D: MixedGraph) -> bool:
    return D.n >= 1 and D.m == D.n - 1 and is_connected(D)


def relabel(D: MixedGraph, perm: Sequence[int]) -> MixedGraph:
    """Rename vertex v to perm[v]."""
    return MixedGraph.build(D.n, [(perm[u], perm[v], k) for u, v, k in D.edges])
