"""Property checks and the enumeration harness, with machine-readable reports.

Every check appends :class:`CheckRecord` rows to a :class:`Report`. Exhaustive sweeps record one
row per (check, underlying graph) summarising all of its orientations; scalar checks record one
row per instance. Reports from independent workers combine with :meth:`Report.merge`.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import kernels as K
from .classify import Outcome, classify_eq2, classify_le2, radius_consistent, verify_certificate
from .enumeration import EnumerationScope, OrientationMode, enumerate_orientations, enumerate_underlying
from .graph import EdgeKind, MixedGraph, attach_pendant, delete_edge, delete_vertex, induced_subgraph, is_connected
from .orient import digit_block, orient, sign_classes
from .polynomial import IntPolynomial
from .spectra import (
    Radius,
    charpoly_leverrier,
    charpoly_sachs,
    compare_radius,
    compare_spectral_radii,
    hermitian_array,
    spectral_radius,
)
from .structure import enumerate_cycles, is_c4_free, walk_exponent
from .sweep import CHECK_NAMES, sweep_graph

MARGIN = 1e-8
TRACE_TOL = 1e-9
FROBENIUS_TOL = 1e-8
PROJECTOR_TOL = 1e-6


@dataclass
class CheckRecord:
    check_id: str
    instance: str
    expected: str
    observed: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "instance": self.instance,
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.passed,
        }


@dataclass
class Report:
    scope: dict = field(default_factory=dict)
    records: list[CheckRecord] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    census: Counter = field(default_factory=Counter)

    def add(self, check_id: str, instance: str, expected, observed, passed: bool) -> None:
        self.records.append(CheckRecord(check_id, instance, str(expected), str(observed), bool(passed)))

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def summary(self) -> dict:
        failed = len(self.failures)
        return {"total": len(self.records), "passed": len(self.records) - failed, "failed": failed}

    def merge(self, other: "Report") -> "Report":
        self.records.extend(other.records)
        self.census.update(other.census)
        self.elapsed_seconds += other.elapsed_seconds
        return self

    def by_check(self) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for r in self.records:
            row = out.setdefault(r.check_id, {"total": 0, "failed": 0})
            row["total"] += 1
            row["failed"] += not r.passed
        return out

    def to_dict(self) -> dict:
        out = {
            "scope": self.scope,
            "checks": [r.to_dict() for r in self.records],
            "summary": self.summary,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }
        if self.census:
            out["census"] = dict(sorted(self.census.items()))
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


class _Timer:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_seconds += time.perf_counter() - self.t0
        return False


def describe(D: MixedGraph) -> str:
    return " ".join([f"n={D.n}"] + [f"{u}{k.value}{v}" for u, v, k in D.edges])


def _without(D: MixedGraph, vertices: Iterable[int]) -> MixedGraph:
    drop = set(vertices)
    return induced_subgraph(D, [v for v in range(D.n) if v not in drop])


def _real_cycle_values(D: MixedGraph):
    """(cycle, +-1) for every real cycle."""
    out = []
    for c in enumerate_cycles(D):
        k = walk_exponent(D, c.vertices) % 4
        if k % 2 == 0:
            out.append((c, 1 if k == 0 else -1))
    return out


def check_deletion_identities(D: MixedGraph, report: Optional[Report] = None) -> Report:
    """Edge and vertex deletion expansions of the characteristic polynomial, exactly."""
    report = report if report is not None else Report()
    with _Timer(report):
        phi = charpoly_leverrier(D)
        real = _real_cycle_values(D)
        x = IntPolynomial((1, 0))
        for u, v, _ in D.edges:
            rhs = charpoly_leverrier(delete_edge(D, u, v)) - charpoly_leverrier(_without(D, (u, v)))
            for c, h in real:
                if any({a, b} == {u, v} for a, b in c.edges()):
                    rhs = rhs - IntPolynomial((2 * h,)) * charpoly_leverrier(_without(D, c.vertices))
            report.add("edge_identity", f"{describe(D)} e={u}{v}", phi, rhs, rhs == phi)
        for v in range(D.n):
            rhs = x * charpoly_leverrier(delete_vertex(D, v)[0])
            for u in sorted(D.adjacency()[v]):
                rhs = rhs - charpoly_leverrier(_without(D, (u, v)))
            for c, h in real:
                if v in c.vertices:
                    rhs = rhs - IntPolynomial((2 * h,)) * charpoly_leverrier(_without(D, c.vertices))
            report.add("vertex_identity", f"{describe(D)} v={v}", phi, rhs, rhs == phi)
    return report


def _strictly_larger(D: MixedGraph, rho: float, E: MixedGraph) -> tuple[bool, str]:
    """rho(D) > rho(E), numerically with margin or else by the exact comparison."""
    r = spectral_radius(E)
    if rho - r > MARGIN:
        return True, f"{rho:.12g} > {r:.12g}"
    if r - rho > MARGIN:
        return False, f"{rho:.12g} < {r:.12g}"
    s = compare_spectral_radii(D, E)
    return s > 0, f"exact sign(rho(D) - rho(D')) = {s}"


def monotonicity_hypothesis(D: MixedGraph) -> bool:
    """Every real cycle is positive and of even length."""
    for c in enumerate_cycles(D):
        k = walk_exponent(D, c.vertices) % 4
        if k % 2 == 0 and (k != 0 or c.length % 2):
            return False
    return True


def check_monotonicity(D: MixedGraph, report: Optional[Report] = None) -> Report:
    """Strict decrease of rho under vertex and edge deletion when the hypothesis holds.

    When it fails the outcome is recorded as an observation (always passing), which is how the
    increase of rho after deleting an edge shows up for graphs such as the D1 fixture.
    """
    report = report if report is not None else Report()
    if not is_connected(D):
        raise ValueError("monotonicity check needs a connected graph")
    with _Timer(report):
        hyp = monotonicity_hypothesis(D)
        rho = spectral_radius(D)
        deletions = [(f"v={v}", delete_vertex(D, v)[0]) for v in range(D.n)]
        deletions += [(f"e={u}{v}", delete_edge(D, u, v)) for u, v, _ in D.edges]
        for label, E in deletions:
            larger, how = _strictly_larger(D, rho, E)
            if hyp:
                report.add("monotonicity", f"{describe(D)} {label}", "rho(D) > rho(D')", how, larger)
            else:
                report.add("monotonicity_observed", f"{describe(D)} {label}", "not asserted", how, True)
    return report


def _peak_support(D: MixedGraph) -> tuple[float, np.ndarray]:
    """rho and, per vertex, the norm of e_u projected onto the eigenspaces at +-rho."""
    H = hermitian_array(D)
    w, V = np.linalg.eigh(H)
    rho = float(np.max(np.abs(w)))
    cols = np.abs(np.abs(w) - rho) <= 1e-9 * max(1.0, rho)
    return rho, np.sqrt(np.sum(np.abs(V[:, cols]) ** 2, axis=1))


def check_pendant_and_unicyclic(
    scope: EnumerationScope, samples: int = 200, seed: int = 0, report: Optional[Report] = None
) -> Report:
    """Pendant attachment raises rho at vertices seen by a peak eigenvector; a unicyclic graph
    whose cycle has rho exactly 2 and which has more vertices than the cycle is Above."""
    report = report if report is not None else Report(scope=scope.to_dict())
    rng = random.Random(seed)
    with _Timer(report):
        graphs = [G for G in enumerate_underlying(scope) if G.m >= 1]
        kinds = list(EdgeKind)
        for _ in range(samples if graphs else 0):
            G = rng.choice(graphs)
            N = G.with_kinds([rng.choice(kinds) for _ in range(G.m)])
            rho, support = _peak_support(N)
            u = rng.randrange(N.n)
            if support[u] <= PROJECTOR_TOL:
                continue
            M = attach_pendant(N, u, rng.choice(kinds))
            larger, how = _strictly_larger(M, spectral_radius(M), N)
            report.add("pendant_raises_rho", f"{describe(N)} u={u}", "rho(M) > rho(N)", how, larger)
        for G in graphs:
            if not (G.m == G.n and is_connected(G)):
                continue
            cycle = enumerate_cycles(G)[0]
            if cycle.length == G.n:
                continue
            for D in enumerate_orientations(G, scope.orientation_mode):
                if compare_radius(induced_subgraph(D, cycle.vertices)).result is not Radius.EXACTLY:
                    continue
                got = compare_radius(D).result
                report.add("unicyclic_above", describe(D), Radius.ABOVE.value, got.value, got is Radius.ABOVE)
    return report


def check_sign_vector_determinism(G: MixedGraph, report: Optional[Report] = None) -> Report:
    """All orientations of G with the same cycle-sign vector share one exact charpoly."""
    report = report if report is not None else Report()
    with _Timer(report):
        cycles, digits, _, labels, reps = sign_classes(G)
        if K.int64_safe(G.n, max(G.degrees(), default=0)):
            eu = np.array([u for u, _, _ in G.edges], dtype=np.int64)
            ev = np.array([v for _, v, _ in G.edges], dtype=np.int64)
            polys = K.charpoly_rows(G.n, eu, ev, digits.astype(np.int64))
        else:
            polys = np.array([charpoly_leverrier(orient(G, row)).coeffs for row in digits], dtype=object)
        bad = 0
        for k, code in enumerate(reps):
            members = polys[labels == k]
            bad += int(np.any(members != polys[code]))
        report.add(
            "sign_vector_determinism",
            f"{describe(G)} ({len(digits)} orientations, {len(reps)} classes)",
            "0 classes with differing charpolys",
            f"{bad} classes with differing charpolys",
            bad == 0,
        )
    return report


def _cross_check_graph(G: MixedGraph, mode: OrientationMode) -> Report:
    report = Report()
    if not is_c4_free(G):
        for D in enumerate_orientations(G, mode):
            le2, eq2 = classify_le2(D), classify_eq2(D)
            ok = le2.outcome is Outcome.OUT_OF_SCOPE and eq2.outcome is Outcome.OUT_OF_SCOPE
            report.census["OutOfScope"] += 1
            report.add("out_of_scope", describe(D), "OutOfScope", f"{le2.outcome.value}/{eq2.outcome.value}", ok)
        return report
    for D in enumerate_orientations(G, mode):
        cmp = compare_radius(D)
        le2, eq2 = classify_le2(D), classify_eq2(D)
        ok = radius_consistent(le2, eq2, cmp) and verify_certificate(D, le2) and verify_certificate(D, eq2)
        tag = (eq2 if eq2.in_list else le2).family_tag
        report.census[f"{tag.value if tag else 'NotInList'}:{cmp.result.value}"] += 1
        report.add(
            "cross_check",
            describe(D),
            f"le2={cmp.result is not Radius.ABOVE} eq2={cmp.result is Radius.EXACTLY}",
            f"le2={le2.in_list} eq2={eq2.in_list} ({cmp.result.value})",
            ok,
        )
    return report


def run_cross_check(scope: EnumerationScope, workers: int = 1) -> Report:
    """Classifier verdicts against exact radius decisions over a whole enumeration scope."""
    report = Report(scope=scope.to_dict())
    t0 = time.perf_counter()
    graphs = list(enumerate_underlying(scope))
    modes = [scope.orientation_mode] * len(graphs)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_cross_check_graph, graphs, modes, chunksize=8))
    else:
        parts = [_cross_check_graph(G, m) for G, m in zip(graphs, modes)]
    for part in parts:
        report.merge(part)
    report.elapsed_seconds = time.perf_counter() - t0
    return report


def check_exhaustive(max_n: int, min_n: int = 1, report: Optional[Report] = None) -> Report:
    """Compiled sweep over every orientation of every connected graph with min_n..max_n vertices:
    deletion identities, the elementary-subgraph expansion, symmetry, positive-cycle
    equivalence and the exact trace and Frobenius identities."""
    scope = EnumerationScope(max_n=max_n, min_n=min_n, c4free_only=False, connected_only=True)
    report = report if report is not None else Report(scope=scope.to_dict())
    with _Timer(report):
        for G in enumerate_underlying(scope):
            res = sweep_graph(G)
            report.census["orientations"] += res.orientations
            for name in CHECK_NAMES:
                bad = res.failures[name]
                first = res.first_failure.get(name)
                report.add(
                    name,
                    f"{describe(G)} ({res.orientations} orientations)",
                    "0 failing orientations",
                    f"{bad} failing" + (f", first code {first}" if first is not None else ""),
                    bad == 0,
                )
    return report


def _hermitian_batch(G: MixedGraph, digits: np.ndarray) -> np.ndarray:
    units = np.array([1, 1j, -1j])
    H = np.zeros((len(digits), G.n, G.n), dtype=complex)
    for t, (u, v, _) in enumerate(G.edges):
        h = units[digits[:, t]]
        H[:, u, v] = h
        H[:, v, u] = np.conj(h)
    return H


def check_numeric_spectra(max_n: int, min_n: int = 1, batch: int = 1 << 15, report: Optional[Report] = None) -> Report:
    """Eigenvalues of every orientation: sum within 1e-9 of 0, sum of squares within 1e-8 of 2|E|."""
    scope = EnumerationScope(max_n=max_n, min_n=min_n, c4free_only=False, connected_only=True)
    report = report if report is not None else Report(scope=scope.to_dict())
    with _Timer(report):
        for G in enumerate_underlying(scope):
            total = 3**G.m
            worst_trace = worst_frob = 0.0
            for lo in range(0, total, batch):
                w = np.linalg.eigvalsh(_hermitian_batch(G, digit_block(G.m, lo, min(lo + batch, total))))
                worst_trace = max(worst_trace, float(np.max(np.abs(w.sum(axis=1)))))
                worst_frob = max(worst_frob, float(np.max(np.abs((w**2).sum(axis=1) - 2 * G.m))))
            label = f"{describe(G)} ({total} orientations)"
            report.add("trace_numeric", label, f"|sum| <= {TRACE_TOL}", f"max {worst_trace:.3e}", worst_trace <= TRACE_TOL)
            report.add("frobenius_numeric", label, f"|sum sq - 2m| <= {FROBENIUS_TOL}", f"max {worst_frob:.3e}", worst_frob <= FROBENIUS_TOL)
    return report


def random_mixed_graph(rng: random.Random, n: int, p: float) -> MixedGraph:
    kinds = list(EdgeKind)
    edges = [(u, v, rng.choice(kinds)) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return MixedGraph.build(n, edges)


def check_random_charpolys(
    count: int, max_n: int = 12, p_range: tuple[float, float] = (0.1, 0.45), seed: int = 0, report: Optional[Report] = None
) -> Report:
    """Elementary-subgraph expansion against the trace recursion on random mixed graphs."""
    report = report if report is not None else Report()
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(count):
            D = random_mixed_graph(rng, rng.randint(1, max_n), rng.uniform(*p_range))
            a, b = charpoly_sachs(D), charpoly_leverrier(D)
            report.add("sachs_agrees_leverrier", describe(D), b, a, a == b)
    return report


def random_c4free_graph(rng: random.Random, n: int, chords: int = 2, max_degree: Optional[int] = None) -> MixedGraph:
    """Connected C4-free mixed graph: a random tree (degree-capped if asked), then up to ``chords``
    extra edges, each kept only if it closes no 4-cycle."""
    cap = max_degree if max_degree is not None else n
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    edges = set()

    def join(u, v):
        edges.add((min(u, v), max(u, v)))
        adj[u].add(v)
        adj[v].add(u)

    for v in range(1, n):
        open_ = [u for u in range(v) if len(adj[u]) < cap] or list(range(v))
        join(rng.choice(open_), v)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in adj[u]]
    rng.shuffle(pairs)
    for u, v in pairs:
        if chords == 0:
            break
        if len(adj[u]) >= cap or len(adj[v]) >= cap:
            continue
        # uv closes a 4-cycle u-v-x-y exactly when a neighbour y of u is adjacent to a neighbour x of v
        if any(adj[y] & adj[v] for y in adj[u]):
            continue
        join(u, v)
        chords -= 1
    kinds = list(EdgeKind)
    return MixedGraph.build(n, [(u, v, rng.choice(kinds)) for u, v in sorted(edges)])


def check_classifier_sample(
    count: int, sizes: tuple[int, ...] = (8, 9), seed: int = 0, report: Optional[Report] = None
) -> Report:
    """Cross-check on random connected C4-free mixed graphs beyond the exhaustive range."""
    report = report if report is not None else Report()
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(count):
            # mostly near-boundary shapes (degree <= 3, few chords) so that every verdict occurs
            D = random_c4free_graph(rng, rng.choice(sizes), chords=rng.choice((0, 0, 1, 1, 2, 4)), max_degree=rng.choice((2, 3, 3, None)))
            cmp = compare_radius(D)
            le2, eq2 = classify_le2(D), classify_eq2(D)
            ok = radius_consistent(le2, eq2, cmp) and verify_certificate(D, le2) and verify_certificate(D, eq2)
            tag = (eq2 if eq2.in_list else le2).family_tag
            report.census[f"{tag.value if tag else 'NotInList'}:{cmp.result.value}"] += 1
            report.add(
                "cross_check_sample",
                describe(D),
                f"le2={cmp.result is not Radius.ABOVE} eq2={cmp.result is Radius.EXACTLY}",
                f"le2={le2.in_list} eq2={eq2.in_list} ({cmp.result.value})",
                ok,
            )
    return report


def check_random_identities(
    count: int, max_n: int = 9, p_range: tuple[float, float] = (0.1, 0.45), seed: int = 0, report: Optional[Report] = None
) -> Report:
    report = report if report is not None else Report()
    rng = random.Random(seed)
    for _ in range(count):
        D = random_mixed_graph(rng, rng.randint(1, max_n), rng.uniform(*p_range))
        check_deletion_identities(D, report)
    return report


def verify_scope(max_n: int, identities_max_n: int = 5, workers: int = 1) -> Report:
    """What the ``verify`` command runs: sign-vector determinism on each underlying graph, the
    classifier cross-check over sign representatives, and the exhaustive sweep for small n."""
    scope = EnumerationScope(max_n=max_n, orientation_mode=OrientationMode.ONE_PER_SIGN_VECTOR)
    report = Report(scope=scope.to_dict() | {"identities_max_n": min(identities_max_n, max_n)})
    t0 = time.perf_counter()
    for G in enumerate_underlying(scope):
        if G.m <= 11:
            check_sign_vector_determinism(G, report)
    report.merge(run_cross_check(scope, workers))
    check_exhaustive(min(identities_max_n, max_n), report=report)
    report.elapsed_seconds = time.perf_counter() - t0
    return report
