import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermspec.gaussint import I, ONE, ZERO, GaussInt

ints = st.integers(-50, 50)
gauss = st.builds(GaussInt, ints, ints)


@given(gauss, gauss, gauss)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + ZERO == a and a * ONE == a


@given(gauss, gauss)
def test_matches_builtin_complex(a, b):
    assert complex(a * b) == complex(a) * complex(b)
    assert complex(a.conjugate()) == complex(a).conjugate()
    assert a.norm() == a.re**2 + a.im**2 == (a * a.conjugate()).re


def test_units():
    assert [GaussInt.unit(k) for k in range(4)] == [ONE, I, -ONE, -I]
    assert I * I == -1
    for k in range(4):
        assert GaussInt.unit(k).is_unit()
        assert GaussInt.unit(k).unit_exponent() == k
    assert not GaussInt(1, 1).is_unit()


@given(gauss, st.integers(1, 9))
def test_exact_div_roundtrip(a, k):
    assert GaussInt(a.re * k, a.im * k).exact_div(k) == a


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        GaussInt(3, 2).exact_div(2)
