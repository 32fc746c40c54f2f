"""Vectorized orientation bookkeeping.

An orientation of an undirected graph G is a digit per edge (edges in G's sorted order):
0 undirected, 1 arc u -> v, 2 arc v -> u, for the stored pair u < v. Orientation codes list
digit tuples in lexicographic order, first edge most significant.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .graph import KIND_BY_DIGIT, MixedGraph
from .structure import Cycle, enumerate_cycles

# exponent of i stored at H[u][v] for each digit
DIGIT_EXPONENT = np.array([0, 1, 3], dtype=np.int64)

MAX_ORIENTATION_EDGES = 14


class TooManyEdges(ValueError):
    pass


def orientation_digits(m: int) -> np.ndarray:
    """All 3**m digit rows, lexicographic (row index == orientation code)."""
    if m > MAX_ORIENTATION_EDGES:
        raise TooManyEdges(f"{m} edges: 3**{m} orientations is past the {MAX_ORIENTATION_EDGES}-edge guard")
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(product(range(3), repeat=m)), dtype=np.int8)


def digit_block(m: int, lo: int, hi: int) -> np.ndarray:
    """Digit rows of orientation codes lo..hi-1, for sweeps past the materialisation guard."""
    codes = np.arange(lo, hi, dtype=np.int64)
    places = 3 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] // places) % 3).astype(np.int8)


def orient(G: MixedGraph, digits) -> MixedGraph:
    return G.with_kinds([KIND_BY_DIGIT[int(d)] for d in digits])


def code_of(digits) -> int:
    code = 0
    for d in digits:
        code = 3 * code + int(d)
    return code


def incidence(G: MixedGraph, cycles: list[Cycle]) -> np.ndarray:
    """m x |cycles| matrix of +1 (edge traversed u -> v), -1 (v -> u), 0 (not on cycle)."""
    index = {(u, v): t for t, (u, v, _) in enumerate(G.edges)}
    out = np.zeros((G.m, len(cycles)), dtype=np.int64)
    for j, c in enumerate(cycles):
        for a, b in c.edges():
            if (a, b) in index:
                out[index[(a, b)], j] += 1
            else:
                out[index[(b, a)], j] -= 1
    return out


def cycle_exponents(digits: np.ndarray, inc: np.ndarray) -> np.ndarray:
    """Row b, column j: k with h(C_j) = i**k under orientation b."""
    return (DIGIT_EXPONENT[digits.astype(np.int64)] @ inc) % 4


def sign_classes(G: MixedGraph, cycles: list[Cycle] | None = None):
    """Group all orientations of G by cycle-sign vector (positive / negative / imaginary per
    cycle; i and -i are not told apart since only Re h(C) enters the charpoly).

    Returns (cycles, digits, exponents, labels, representatives): ``labels[b]`` is the class of
    orientation b and ``representatives[k]`` the lexicographically least orientation in class k.
    """
    cycles = enumerate_cycles(G) if cycles is None else cycles
    digits = orientation_digits(G.m)
    exps = cycle_exponents(digits, incidence(G, cycles))
    if exps.shape[1] == 0:
        labels = np.zeros(len(digits), dtype=np.int64)
        return cycles, digits, exps, labels, np.array([0])
    key = np.where(exps % 2 == 1, 1, exps)
    _, first, labels = np.unique(key, axis=0, return_index=True, return_inverse=True)
    labels = labels.reshape(-1)
    # relabel classes in order of first appearance so representatives are sorted by code
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    return cycles, digits, exps, rank[labels], first[order]
