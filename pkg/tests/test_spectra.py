import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mixed_graphs, ring
from hermspec.gaussint import I
from hermspec.graph import EdgeKind, MixedGraph, delete_edge, delete_vertex
from hermspec.polynomial import IntPolynomial
from hermspec.spectra import (
    Radius,
    RadiusComparison,
    charpoly,
    charpoly_leverrier,
    charpoly_sachs,
    compare_polynomial_radius,
    compare_radius,
    compare_spectral_radii,
    eigenvalues,
    hermitian_matrix,
    spectral_radius,
)

F, B, U = EdgeKind.FORWARD, EdgeKind.BACKWARD, EdgeKind.UNDIRECTED


def test_hermitian_entries(d1):
    H = hermitian_matrix(d1)
    assert H[1, 2] == I and H[2, 1] == -I and H[0, 1] == 1 and H[0, 2] == 0
    assert H.is_hermitian()


@settings(deadline=None, max_examples=80)
@given(mixed_graphs(max_n=7))
def test_methods_agree(D):
    assert charpoly_sachs(D) == charpoly_leverrier(D)


@settings(deadline=None, max_examples=40)
@given(mixed_graphs(max_n=5))
def test_leverrier_matches_sympy_determinant(D):
    lam = sympy.Symbol("lam")
    H = sympy.zeros(D.n, D.n)
    for a in range(D.n):
        for b in range(D.n):
            z = complex(hermitian_matrix(D)[a, b])
            H[a, b] = int(z.real) + sympy.I * int(z.imag)
    expected = sympy.Poly((lam * sympy.eye(D.n) - H).det(), lam).all_coeffs() if D.n else [1]
    assert [int(c) for c in expected] == list(charpoly_leverrier(D).coeffs)


@settings(deadline=None)
@given(mixed_graphs(max_n=8))
def test_trace_identities(D):
    p = charpoly(D)
    assert p.degree == D.n and p.coefficient(0) == 1
    if D.n >= 2:
        assert p.coefficient(1) == 0 and -2 * p.coefficient(2) == 2 * D.m
    ev = eigenvalues(D)
    assert abs(ev.sum()) <= 1e-9
    assert abs((ev**2).sum() - 2 * D.m) <= 1e-8
    scale = max(abs(c) for c in p.coeffs)
    assert all(abs(p(float(x))) <= 1e-6 * scale for x in ev)


def test_imaginary_triangle():
    assert str(charpoly(ring(3, [F, U, U]), "sachs")) == "λ^3 - 3λ"
    assert str(charpoly(ring(3, [F, U, U]), "leverrier")) == "λ^3 - 3λ"


def test_quadrilaterals():
    assert charpoly(ring(4)) == IntPolynomial((1, 0, -4, 0, 0))
    assert charpoly(ring(4, [F, F, U, U])) == IntPolynomial((1, 0, -4, 0, 4))


@pytest.mark.parametrize("n", range(3, 10))
@pytest.mark.parametrize("k", range(4))
def test_cycle_closed_form(n, k):
    """A mixed cycle with value i**k has eigenvalues 2 cos((k pi/2 + 2 pi j) / n)."""
    kinds = [F] * k + [U] * (n - k) if k < 3 else [B] + [U] * (n - 1)
    D = ring(n, kinds)
    theta = (k % 4) * math.pi / 2
    expected = sorted(2 * math.cos((theta + 2 * math.pi * j) / n) for j in range(n))
    assert np.allclose(sorted(eigenvalues(D)), expected, atol=1e-10)


@pytest.mark.parametrize("n", range(1, 10))
def test_path_closed_form_any_orientation(n):
    rng = np.random.default_rng(n)
    kinds = [list(EdgeKind)[i] for i in rng.integers(0, 3, n - 1)]
    D = MixedGraph.build(n, [(j, j + 1, k) for j, k in enumerate(kinds)])
    expected = sorted(2 * math.cos(math.pi * j / (n + 1)) for j in range(1, n + 1))
    assert np.allclose(sorted(eigenvalues(D)), expected, atol=1e-10)


def test_fig1_d1(d1):
    assert charpoly(d1) == IntPolynomial((1, 0, -5, 0, 4))
    assert compare_radius(d1).result is Radius.EXACTLY
    assert compare_radius(delete_vertex(d1, 2)[0]).result is Radius.EXACTLY
    assert abs(spectral_radius(d1) - 2) < 1e-9
    assert abs(spectral_radius(delete_edge(d1, 2, 3)) - 2.170) < 1e-3
    assert compare_spectral_radii(delete_edge(d1, 2, 3), d1) == 1


def test_fig1_d2(d2):
    assert charpoly(d2) == IntPolynomial((1, 0, -6, 0, 9))
    assert abs(spectral_radius(d2) - math.sqrt(3)) < 1e-9
    assert abs(spectral_radius(delete_vertex(d2, 1)[0]) - math.sqrt(3)) < 1e-9
    assert compare_radius(delete_edge(d2, 0, 2)).result is Radius.EXACTLY
    assert compare_radius(d2).result is Radius.BELOW
    assert compare_radius(d2, Fraction(17, 10)).result is Radius.ABOVE


@settings(deadline=None)
@given(mixed_graphs(max_n=8), st.sampled_from([Fraction(2), Fraction(3, 2), Fraction(5, 2)]))
def test_radius_decision_agrees_with_eigensolver(D, bound):
    cmp = compare_radius(D, bound)
    rho = spectral_radius(D)
    if abs(rho - bound) > 1e-6:
        assert cmp.result is (Radius.ABOVE if rho > bound else Radius.BELOW)
    else:
        assert cmp.result is Radius.EXACTLY


def test_radius_comparison_validates_witness():
    with pytest.raises(ValueError):
        RadiusComparison(Radius.BELOW, Fraction(2), 1, 0, False, False)
    with pytest.raises(ValueError):
        compare_polynomial_radius(IntPolynomial((1, 0)), 0)


def test_unknown_method():
    with pytest.raises(ValueError):
        charpoly(ring(3), "qr")
