"""Exhaustive generation of small underlying graphs and of their orientations.

Cost model: a scope visits (#underlying graphs) x 3**|E| orientations in ``ALL`` mode and
(#underlying graphs) x (#cycle-sign vectors) in ``ONE_PER_SIGN_VECTOR`` mode.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterator

from .canon import certificate
from .graph import MixedGraph
from .orient import MAX_ORIENTATION_EDGES, TooManyEdges, orient, orientation_digits, sign_classes
from .structure import is_c4_free

HARD_MAX_N = 10
DEFAULT_MAX_N = 8


class ScopeTooLarge(ValueError):
    pass


class OrientationMode(enum.Enum):
    ALL = "all"
    ONE_PER_SIGN_VECTOR = "one-per-sign-vector"


@dataclass(frozen=True)
class EnumerationScope:
    max_n: int
    c4free_only: bool = True
    connected_only: bool = True
    orientation_mode: OrientationMode = OrientationMode.ALL
    min_n: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise ValueError("max_n >= 1")

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "min_n": self.min_n,
            "c4free_only": self.c4free_only,
            "connected_only": self.connected_only,
            "orientation_mode": self.orientation_mode.value,
        }


def max_n_guard() -> int:
    """Enumeration limit: HERMSPEC_MAX_N if set, never above the hard cap."""
    raw = os.environ.get("HERMSPEC_MAX_N")
    value = int(raw) if raw else DEFAULT_MAX_N
    return min(value, HARD_MAX_N)


def _extend(G: MixedGraph, mask: int) -> MixedGraph:
    edges = list(G.edges) + [(v, G.n) for v in range(G.n) if mask >> v & 1]
    return MixedGraph.build(G.n + 1, edges)


def _connected_levels(max_n: int, c4free: bool) -> Iterator[list[MixedGraph]]:
    """Connected graphs level by level: each graph on k+1 vertices arises from one on k vertices
    by adding a vertex with a nonempty neighbourhood (delete any non-cut vertex to see this).
    Duplicates are removed by canonical certificate. C4-freeness is hereditary, so filtering at
    every level is safe."""
    level = [MixedGraph(1)]
    yield level
    for k in range(1, max_n):
        seen = {}
        for G in level:
            for mask in range(1, 1 << k):
                H = _extend(G, mask)
                if c4free and not is_c4_free(H):
                    continue
                cert = certificate(H)
                if cert not in seen:
                    seen[cert] = MixedGraph.build(H.n, cert[1])
        level = [seen[c] for c in sorted(seen)]
        yield level


def _all_graphs(n: int, c4free: bool) -> list[MixedGraph]:
    """Every graph on exactly n vertices up to isomorphism, as disjoint unions of connected ones."""
    conn = list(_connected_levels(n, c4free)) if n else []
    by_size = {k + 1: lvl for k, lvl in enumerate(conn)}
    out: dict = {}

    def rec(remaining: int, max_part: tuple, parts: list[MixedGraph]) -> None:
        if remaining == 0:
            from .graph import disjoint_union

            G = disjoint_union(*parts) if parts else MixedGraph(0)
            cert = certificate(G)
            out.setdefault(cert, MixedGraph.build(G.n, cert[1]))
            return
        for size in range(min(remaining, max_part[0]), 0, -1):
            for idx, H in enumerate(by_size[size]):
                key = (size, idx)
                if key > max_part:
                    continue
                rec(remaining - size, key, parts + [H])

    rec(n, (n, len(by_size.get(n, [])) + 1), [])
    return [out[c] for c in sorted(out)]


def enumerate_underlying(scope: EnumerationScope) -> Iterator[MixedGraph]:
    """Undirected graphs on min_n..max_n vertices, one per isomorphism class, ordered by
    (n, certificate)."""
    guard = max_n_guard()
    if scope.max_n > guard:
        raise ScopeTooLarge(f"max_n={scope.max_n} exceeds the enumeration guard {guard} (hard cap {HARD_MAX_N})")
    if scope.connected_only:
        for k, level in enumerate(_connected_levels(scope.max_n, scope.c4free_only), start=1):
            if k >= scope.min_n:
                yield from level
    else:
        for k in range(max(scope.min_n, 1), scope.max_n + 1):
            yield from _all_graphs(k, scope.c4free_only)


def enumerate_orientations(G: MixedGraph, mode: OrientationMode = OrientationMode.ALL) -> Iterator[MixedGraph]:
    """All 3**|E| mixed graphs over G, or the lexicographically least one per cycle-sign vector."""
    if G.m > MAX_ORIENTATION_EDGES:
        raise TooManyEdges(f"{G.m} edges exceeds the {MAX_ORIENTATION_EDGES}-edge guard")
    if mode is OrientationMode.ALL:
        for row in orientation_digits(G.m):
            yield orient(G, row)
        return
    _, digits, _, _, reps = sign_classes(G)
    for code in reps:
        yield orient(G, digits[code])
