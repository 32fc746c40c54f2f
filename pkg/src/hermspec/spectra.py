"""Hermitian adjacency matrix, exact characteristic polynomials, eigenvalues, and exact
spectral-radius decisions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .gaussint import ONE, ZERO, GaussInt
from .graph import MixedGraph
from .polynomial import IntPolynomial, compare_largest_roots, count_roots, is_root, sturm_chain
from .structure import CycleSign, enumerate_cycles, iter_elementary, sign_vector


@dataclass(frozen=True)
class HermitianMatrix:
    n: int
    entries: tuple[tuple[GaussInt, ...], ...]

    def __getitem__(self, idx: tuple[int, int]) -> GaussInt:
        u, v = idx
        return self.entries[u][v]

    def to_numpy(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=complex)
        for u in range(self.n):
            for v in range(self.n):
                out[u, v] = complex(self.entries[u][v])
        return out

    def is_hermitian(self) -> bool:
        return all(
            self.entries[u][v] == self.entries[v][u].conjugate()
            for u in range(self.n)
            for v in range(self.n)
        )


def hermitian_matrix(D: MixedGraph) -> HermitianMatrix:
    rows = [[ZERO] * D.n for _ in range(D.n)]
    for u, v, kind in D.edges:
        h = GaussInt.unit(kind.exponent)
        rows[u][v] = h
        rows[v][u] = h.conjugate()
    return HermitianMatrix(D.n, tuple(tuple(r) for r in rows))


def hermitian_array(D: MixedGraph) -> np.ndarray:
    """H(D) as a complex numpy array."""
    H = np.zeros((D.n, D.n), dtype=complex)
    units = (1, 1j, -1, -1j)
    for u, v, kind in D.edges:
        h = units[kind.exponent]
        H[u, v] = h
        H[v, u] = np.conj(h)
    return H


def charpoly_leverrier(D: MixedGraph) -> IntPolynomial:
    """det(xI - H(D)) by the Faddeev-LeVerrier recursion in exact Gaussian-integer arithmetic.

    M_1 = I, c_k = -tr(H M_k) / k, M_{k+1} = H M_k + c_k I. Every c_k must come out a
    rational integer; anything else is a bug and raises.
    """
    n = D.n
    H = hermitian_matrix(D)
    rows = [[(w, H[u, w]) for w in range(n) if H[u, w]] for u in range(n)]
    coeffs = [1]
    M = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    for k in range(1, n + 1):
        HM = [[sum((h * M[w][j] for w, h in rows[u]), ZERO) for j in range(n)] for u in range(n)]
        trace = sum((HM[a][a] for a in range(n)), ZERO)
        if trace.im != 0:
            raise ArithmeticError(f"non-real trace {trace} at step {k}")
        c = trace.exact_div(k)
        ck = -c.re
        coeffs.append(ck)
        for a in range(n):
            HM[a][a] = HM[a][a] + ck
        M = HM
    # the final M is H * adj-terms + c_n I, which must vanish (Cayley-Hamilton)
    if any(M[a][b] for a in range(n) for b in range(n)):
        raise ArithmeticError("Cayley-Hamilton residual is nonzero")
    return IntPolynomial(tuple(coeffs))


def charpoly_sachs(D: MixedGraph) -> IntPolynomial:
    """Coefficients from elementary subgraphs whose cycles are all real:
    c_i = sum (-1)^(components + negative cycles) * 2^(cycles)."""
    cycles = enumerate_cycles(D)
    signs = dict(zip(cycles, sign_vector(D, cycles)))
    coeffs = [1]
    for i in range(1, D.n + 1):
        total = 0
        for H in iter_elementary(D, i, real_only=True, cycles=cycles):
            s = sum(signs[c] is CycleSign.NEGATIVE for c in H.cycles)
            total += (-1) ** (H.components + s) * 2**H.cycle_count
        coeffs.append(total)
    return IntPolynomial(tuple(coeffs))


def charpoly(D: MixedGraph, method: str = "leverrier") -> IntPolynomial:
    if method == "leverrier":
        return charpoly_leverrier(D)
    if method == "sachs":
        return charpoly_sachs(D)
    raise ValueError(f"unknown method {method!r}")


def eigenvalues(D: MixedGraph) -> np.ndarray:
    """Hermitian eigenvalues, descending."""
    if D.n == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(hermitian_array(D))[::-1]


def spectral_radius(D: MixedGraph) -> float:
    if D.m == 0:
        return 0.0
    return float(np.max(np.abs(eigenvalues(D))))


class Radius(enum.Enum):
    BELOW = "Below"
    EXACTLY = "Exactly"
    ABOVE = "Above"


@dataclass(frozen=True)
class RadiusComparison:
    """Exact position of rho(D) relative to a rational bound."""

    result: Radius
    bound: Fraction
    roots_above: int  # distinct roots in (bound, inf)
    roots_below: int  # distinct roots in (-inf, -bound)
    bound_is_root: bool
    neg_bound_is_root: bool

    def __post_init__(self) -> None:
        outside = self.roots_above + self.roots_below
        on_edge = self.bound_is_root or self.neg_bound_is_root
        expected = Radius.ABOVE if outside else (Radius.EXACTLY if on_edge else Radius.BELOW)
        if expected is not self.result:
            raise ValueError(f"witness data {self} inconsistent with {self.result}")

    def to_dict(self) -> dict:
        return {
            "result": self.result.value,
            "bound": str(self.bound),
            "roots_above": self.roots_above,
            "roots_below": self.roots_below,
            "bound_is_root": self.bound_is_root,
            "neg_bound_is_root": self.neg_bound_is_root,
        }


def compare_polynomial_radius(p: IntPolynomial, bound: Union[int, Fraction, str]) -> RadiusComparison:
    b = Fraction(bound)
    if b <= 0:
        raise ValueError("bound must be positive")
    if p.degree <= 0:
        return RadiusComparison(Radius.BELOW, b, 0, 0, False, False)
    chain = sturm_chain(p)
    above = count_roots(None, b, None, chain)
    at_neg = is_root(p, -b)
    below = count_roots(None, None, -b, chain) - int(at_neg)
    at_pos = is_root(p, b)
    if above or below:
        result = Radius.ABOVE
    elif at_pos or at_neg:
        result = Radius.EXACTLY
    else:
        result = Radius.BELOW
    return RadiusComparison(result, b, above, below, at_pos, at_neg)


def compare_radius(D: MixedGraph, bound: Union[int, Fraction, str] = 2, method: str = "leverrier") -> RadiusComparison:
    """Exact Below / Exactly / Above decision for rho(D) against ``bound``."""
    return compare_polynomial_radius(charpoly(D, method), bound)


def _abs_poly(p: IntPolynomial) -> IntPolynomial:
    # roots of p(x)p(-x) are +-lambda, so its largest root is the spectral radius
    return p * p.reflect()


def compare_spectral_radii(D1: MixedGraph, D2: MixedGraph) -> int:
    """sign(rho(D1) - rho(D2)), exact."""
    p1, p2 = charpoly_leverrier(D1), charpoly_leverrier(D2)
    return compare_polynomial_radii(p1, p2)


def compare_polynomial_radii(p1: IntPolynomial, p2: IntPolynomial) -> int:
    # a graph with no vertices has rho = 0, the same as the root 0 of x
    q1 = _abs_poly(p1) if p1.degree > 0 else IntPolynomial((1, 0))
    q2 = _abs_poly(p2) if p2.degree > 0 else IntPolynomial((1, 0))
    return compare_largest_roots(q1, q2)
