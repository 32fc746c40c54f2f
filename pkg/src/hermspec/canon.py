"""Canonical labelling of small undirected graphs by individualization-refinement.

Good enough for n <= 12. Twin pruning keeps stars and cliques from blowing up the search tree.
"""

from __future__ import annotations

from typing import Sequence

from .graph import MixedGraph

Certificate = tuple[int, tuple[tuple[int, int], ...]]


def _refine(cells: list[list[int]], adj: Sequence[set[int]]) -> list[list[int]]:
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[where[w]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _all_twins(cell: list[int], adj: Sequence[set[int]]) -> bool:
    a = cell[0]
    return all(adj[a] - {b} == adj[b] - {a} for b in cell[1:])


def canonical_labeling(G: MixedGraph) -> tuple[Certificate, tuple[int, ...]]:
    """Return (certificate, perm) with perm[v] the canonical label of v.

    Two undirected graphs are isomorphic iff their certificates are equal. Edge kinds are ignored.
    """
    adj = G.adjacency()
    n = G.n
    if n == 0:
        return (0, ()), ()
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(adj[v]), []).append(v)
    start = _refine([by_degree[d] for d in sorted(by_degree)], adj)
    best: list = [None, None]

    def leaf(cells: list[list[int]]) -> None:
        perm = [0] * n
        for i, cell in enumerate(cells):
            perm[cell[0]] = i
        edges = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v, _ in G.edges))
        if best[0] is None or edges < best[0]:
            best[0], best[1] = edges, tuple(perm)

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        choices = cell[:1] if _all_twins(cell, adj) else cell
        for v in choices:
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
            search(_refine(split, adj))

    search(start)
    return (n, best[0]), best[1]


def certificate(G: MixedGraph) -> Certificate:
    return canonical_labeling(G)[0]


def canonical_graph(G: MixedGraph) -> MixedGraph:
    """Undirected copy of G relabelled canonically."""
    (n, edges), _ = canonical_labeling(G)
    return MixedGraph.build(n, edges)


def are_isomorphic(G: MixedGraph, H: MixedGraph) -> bool:
    """Isomorphism of the underlying graphs."""
    return G.n == H.n and G.m == H.m and certificate(G) == certificate(H)
