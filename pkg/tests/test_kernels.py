import numpy as np
import pytest
from hypothesis import given, settings

from conftest import mixed_graphs
from hermspec import kernels as K
from hermspec import sweep
from hermspec.graph import MixedGraph
from hermspec.spectra import charpoly_leverrier, charpoly_sachs
from hermspec.structure import enumerate_cycles
from hermspec.sweep import CHECK_NAMES, cycle_set_table, sweep_graph


def _arrays(D):
    eu = np.array([u for u, _, _ in D.edges], dtype=np.int64)
    ev = np.array([v for _, v, _ in D.edges], dtype=np.int64)
    return eu, ev


@settings(deadline=None)
@given(mixed_graphs(max_n=9))
def test_compiled_charpoly_matches_exact(D):
    eu, ev = _arrays(D)
    row = K.charpoly_rows(D.n, eu, ev, np.array([D.orientation_digits()], dtype=np.int64).reshape(1, D.m))[0]
    assert tuple(int(c) for c in row) == charpoly_leverrier(D).coeffs


@settings(deadline=None, max_examples=50)
@given(mixed_graphs(max_n=7))
def test_grouped_expansion_matches_scalar(D):
    cycles = enumerate_cycles(D)
    ptr, edge, direction, _, _ = sweep._cycle_arrays(D, cycles)
    set_ptr, set_cyc, set_coef = cycle_set_table(D, cycles)
    digits = np.array([D.orientation_digits()], dtype=np.int64).reshape(1, D.m)
    row = K.sachs_rows(D.n, ptr, edge, direction, set_ptr, set_cyc, set_coef, digits)[0]
    assert tuple(int(c) for c in row) == charpoly_sachs(D).coeffs


def test_table_order_is_orientation_code():
    tri = MixedGraph.build(3, [(0, 1), (1, 2), (0, 2)])
    eu, ev = _arrays(tri)
    table = K.charpoly_table(3, eu, ev, 0, 27)
    assert list(table[0]) == [1, 0, -3, -2]  # all undirected
    assert list(table[9]) == [1, 0, -3, 0]  # 0->1 only: imaginary triangle


def test_int64_bound():
    assert K.int64_safe(6, 5)  # K6, the largest exhaustive case
    assert K.int64_safe(12, 3) and not K.int64_safe(12, 5)
    assert not K.int64_safe(30, 29)


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 1)],
        [(0, 1), (1, 2), (0, 2)],
        [(0, 1), (1, 2), (2, 3), (0, 3)],
        [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
        [(a, b) for a in range(4) for b in range(a + 1, 4)],
        [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)],
    ],
)
def test_sweep_passes_small_graphs(edges):
    G = MixedGraph.build(max(max(e) for e in edges) + 1, edges)
    res = sweep_graph(G)
    assert res.orientations == 3**G.m
    assert res.passed, res.failures


def test_sweep_is_chunk_independent():
    G = MixedGraph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert sweep_graph(G, chunk=7).failures == sweep_graph(G).failures


def _bowtie():
    return MixedGraph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def test_sweep_detects_corrupted_deletion_table(monkeypatch):
    real = sweep._deletion_tables

    def corrupted(G, dtype):
        which, pw, pflip, gme = real(G, dtype)
        return which, pw, pflip, gme + 1

    monkeypatch.setattr(sweep, "_deletion_tables", corrupted)
    res = sweep_graph(_bowtie())
    assert res.failures["edge_identity"] == 3**6 * 6
    assert res.failures["vertex_identity"] == 0


def test_sweep_detects_corrupted_subset_table(monkeypatch):
    real = sweep._subset_tables

    def corrupted(G, eu, ev, dtype):
        row0, ts_ptr, ts_set, ts_w, table = real(G, eu, ev, dtype)
        table = table.copy()
        table[:, 0] += 1
        return row0, ts_ptr, ts_set, ts_w, table

    monkeypatch.setattr(sweep, "_subset_tables", corrupted)
    res = sweep_graph(_bowtie())
    assert res.failures["vertex_identity"] > 0 and res.failures["edge_identity"] > 0


def test_sweep_detects_wrong_expansion(monkeypatch):
    real = sweep.cycle_set_table

    def corrupted(G, cycles):
        set_ptr, set_cyc, set_coef = real(G, cycles)
        set_coef = set_coef.copy()
        set_coef[-1, -1] += 2  # perturb the largest cycle set
        return set_ptr, set_cyc, set_coef

    monkeypatch.setattr(sweep, "cycle_set_table", corrupted)
    res = sweep_graph(_bowtie())
    assert res.failures["sachs_agrees_leverrier"] > 0
    assert set(res.first_failure) == {"sachs_agrees_leverrier"}
    assert set(res.failures) == set(CHECK_NAMES)
