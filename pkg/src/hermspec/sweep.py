"""Exhaustive per-graph sweeps: every orientation of one underlying graph in a compiled loop.

For an underlying graph G the sweep precomputes charpoly tables of G - e and of every proper
induced subgraph (indexed by the restricted orientation code), the cycle/edge and cycle/vertex
incidences, and the elementary-subgraph expansion grouped by cycle set. The kernel then checks
the deletion identities, the expansion, and the exact spectral properties for each orientation.
"""

from __future__ import annotations

import math
import time
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import kernels as K
from .canon import canonical_labeling
from .graph import MixedGraph
from .structure import Cycle, enumerate_cycles, iter_elementary

CHECK_NAMES = (
    "edge_identity",
    "vertex_identity",
    "sachs_agrees_leverrier",
    "odd_coefficients_vanish",
    "positive_cycles_cospectral",
    "trace_zero",
    "frobenius_2m",
)


def _edge_arrays(G: MixedGraph) -> tuple[np.ndarray, np.ndarray]:
    eu = np.array([u for u, _, _ in G.edges], dtype=np.int64)
    ev = np.array([v for _, v, _ in G.edges], dtype=np.int64)
    return eu, ev


def _cycle_arrays(G: MixedGraph, cycles: list[Cycle]):
    index = {(u, v): t for t, (u, v, _) in enumerate(G.edges)}
    ptr, edge, sign, mask, length = [0], [], [], [], []
    for c in cycles:
        for a, b in c.edges():
            if (a, b) in index:
                edge.append(index[(a, b)])
                sign.append(1)
            else:
                edge.append(index[(b, a)])
                sign.append(-1)
        ptr.append(len(edge))
        mask.append(sum(1 << v for v in c.vertices))
        length.append(c.length)
    as64 = lambda x: np.array(x, dtype=np.int64)
    return as64(ptr), as64(edge), as64(sign), as64(mask), as64(length)


def _ragged(groups: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    ptr = np.zeros(len(groups) + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(g) for g in groups])
    flat = np.array([x for g in groups for x in g], dtype=np.int64)
    return ptr, flat


def cycle_set_table(G: MixedGraph, cycles: list[Cycle]):
    """Elementary subgraphs of G grouped by their cycle set.

    Row s holds sum over matchings completing cycle set s of (-1)^components * 2^cycles, by
    order. Multiplying by the product of Re h(C) recovers the expansion of any orientation.
    """
    pos = {c: j for j, c in enumerate(cycles)}
    coef: dict[tuple[int, ...], np.ndarray] = defaultdict(lambda: np.zeros(G.n + 1, dtype=np.int64))
    for i in range(G.n + 1):
        for H in iter_elementary(G, i, cycles=cycles):
            key = tuple(sorted(pos[c] for c in H.cycles))
            coef[key][i] += (-1) ** H.components * 2**H.cycle_count
    keys = sorted(coef, key=lambda k: (len(k), k))
    set_ptr, set_cyc = _ragged([list(k) for k in keys])
    set_coef = np.array([coef[k] for k in keys], dtype=np.int64).reshape(len(keys), G.n + 1)
    return set_ptr, set_cyc, set_coef


def _table_dtype(n: int, max_degree: int):
    d = max(max_degree, 1)
    bound = max(math.comb(n, k) * d**k for k in range(n + 1))
    return np.int16 if bound < 2**15 else np.int32 if bound < 2**31 else np.int64


def _subset_tables(G: MixedGraph, eu: np.ndarray, ev: np.ndarray, dtype):
    """Charpoly tables of G[S] for every proper subset S, stacked with rows padded to n+1.

    Also returns, per edge t, the subsets containing it and the place value of t in each
    subset's orientation code, so the row index can be updated digit by digit.
    """
    n, m = G.n, G.m
    full = (1 << n) - 1
    row0, blocks = [], []
    per_edge: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    offset = 0
    for S in range(full):
        inside = [t for t in range(m) if S >> eu[t] & 1 and S >> ev[t] & 1]
        for pos, t in enumerate(inside):
            per_edge[t].append((S, 3 ** (len(inside) - 1 - pos)))
        verts = [v for v in range(n) if S >> v & 1]
        relabel = {v: k for k, v in enumerate(verts)}
        su = np.array([relabel[int(eu[t])] for t in inside], dtype=np.int64)
        sv = np.array([relabel[int(ev[t])] for t in inside], dtype=np.int64)
        table = K.charpoly_table(len(verts), su, sv, 0, 3 ** len(inside))
        block = np.zeros((table.shape[0], n + 1), dtype=dtype)
        block[:, : table.shape[1]] = table
        blocks.append(block)
        row0.append(offset)
        offset += table.shape[0]
    ts_ptr, ts_set = _ragged([[S for S, _ in lst] for lst in per_edge])
    _, ts_w = _ragged([[w for _, w in lst] for lst in per_edge])
    table = np.concatenate(blocks) if blocks else np.zeros((0, n + 1), dtype=dtype)
    return np.array(row0, dtype=np.int64), ts_ptr, ts_set, ts_w, table


def _deletion_tables(G: MixedGraph, dtype):
    """One charpoly table per isomorphism class of G - e, and the place value (with a direction
    flip flag) of every other edge inside the table of G - e."""
    n, m = G.n, G.m
    which = np.zeros(m, dtype=np.int64)
    pw = np.zeros((m, m), dtype=np.int64)
    pflip = np.zeros((m, m), dtype=np.int64)
    classes: dict = {}
    tables = []
    for e in range(m):
        keep = [t for t in range(m) if t != e]
        H = MixedGraph.build(n, [G.edges[t][:2] for t in keep])
        cert, perm = canonical_labeling(H)
        if cert not in classes:
            classes[cert] = len(tables)
            cu = np.array([a for a, _ in cert[1]], dtype=np.int64)
            cv = np.array([b for _, b in cert[1]], dtype=np.int64)
            tables.append(K.charpoly_table(n, cu, cv, 0, 3 ** (m - 1)).astype(dtype))
        which[e] = classes[cert]
        position = {pair: c for c, pair in enumerate(cert[1])}
        for t in keep:
            u, v, _ = G.edges[t]
            a, b = perm[u], perm[v]
            pw[e, t] = 3 ** (m - 2 - position[(min(a, b), max(a, b))])
            pflip[e, t] = a > b
    gme = np.stack(tables) if tables else np.zeros((1, 1, n + 1), dtype=dtype)
    return which, pw, pflip, gme


def _grouped(cycles: list[Cycle], members: list[list[int]]):
    """Per owner (edge or vertex), its cycles grouped by vertex set; and per cycle its groups."""
    owner_ptr, g_mask, g_len = [0], [], []
    groups_of: list[list[int]] = [[] for _ in cycles]
    for js in members:
        by_set: dict[int, list[int]] = defaultdict(list)
        for j in js:
            by_set[sum(1 << v for v in cycles[j].vertices)].append(j)
        for mask in sorted(by_set):
            for j in by_set[mask]:
                groups_of[j].append(len(g_mask))
            g_mask.append(mask)
            g_len.append(bin(mask).count("1"))
        owner_ptr.append(len(g_mask))
    jg_ptr, jg_grp = _ragged(groups_of)
    as64 = lambda x: np.array(x, dtype=np.int64)
    return as64(owner_ptr), as64(g_mask), as64(g_len), jg_ptr, jg_grp


@dataclass
class SweepResult:
    graph: MixedGraph
    orientations: int
    failures: dict[str, int]
    first_failure: dict[str, int]
    elapsed: float
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())


def sweep_graph(G: MixedGraph, chunk: int = 1 << 18) -> SweepResult:
    """Check every orientation of G. Requires the int64 magnitude bound to hold."""
    start_t = time.perf_counter()
    n, m = G.n, G.m
    if not K.int64_safe(n, max(G.degrees(), default=0)):
        raise OverflowError(f"graph with n={n} is past the int64 bound of the compiled kernel")
    eu, ev = _edge_arrays(G)
    cycles = enumerate_cycles(G)
    cyc_ptr, cyc_edge, cyc_dir, _, cyc_len = _cycle_arrays(G, cycles)
    through_edge: list[list[int]] = [[] for _ in range(m)]
    through_dir: list[list[int]] = [[] for _ in range(m)]
    for j in range(len(cycles)):
        for q in range(cyc_ptr[j], cyc_ptr[j + 1]):
            through_edge[cyc_edge[q]].append(j)
            through_dir[cyc_edge[q]].append(int(cyc_dir[q]))
    te_ptr, te_cyc = _ragged(through_edge)
    _, te_dir = _ragged(through_dir)
    through_vertex = [[j for j, c in enumerate(cycles) if v in c.vertices] for v in range(n)]
    eg_ptr, g_mask, g_len, jg_ptr, jg_grp = _grouped(cycles, through_edge + through_vertex)
    vg_ptr = eg_ptr[m:]
    cyc_odd = (cyc_len % 2).astype(np.int64)
    set_ptr, set_cyc, set_coef = cycle_set_table(G, cycles)
    dtype = _table_dtype(n, max(G.degrees(), default=0))
    sub_row0, ts_ptr, ts_set, ts_w, sub_table = _subset_tables(G, eu, ev, dtype)
    which, pw, pflip, gme = _deletion_tables(G, dtype)
    phi_g = K.charpoly_table(n, eu, ev, 0, 1)[0]
    counts = np.zeros(K.N_CHECKS, dtype=np.int64)
    first = np.full(K.N_CHECKS, -1, dtype=np.int64)
    total = 3**m
    for lo in range(0, total, chunk):
        K.exhaustive_sweep(
            n, eu, ev, lo, min(lo + chunk, total), which, pw, pflip, gme,
            sub_row0, ts_ptr, ts_set, ts_w, sub_table,
            cyc_odd, te_ptr, te_cyc, te_dir, jg_ptr, jg_grp,
            eg_ptr, vg_ptr, g_mask, g_len,
            set_ptr, set_cyc, set_coef, phi_g, counts, first,
        )
    return SweepResult(
        graph=G,
        orientations=total,
        failures=dict(zip(CHECK_NAMES, map(int, counts))),
        first_failure={k: int(f) for k, f in zip(CHECK_NAMES, first) if f >= 0},
        elapsed=time.perf_counter() - start_t,
    )
