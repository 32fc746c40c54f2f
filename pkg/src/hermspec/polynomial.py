"""Integer polynomials and exact real-root counting with Sturm chains over the rationals."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

# an absent endpoint means -inf (lower) or +inf (upper)
Endpoint = Union[Rational, None]


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, highest degree first: ``c0*x^n + ... + cn``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[0] == 0:
            c = c[1:]
        if not c:
            c = (0,)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_low(cls, low_first: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(reversed(list(low_first))))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((c,) + (0,) * k)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def coefficient(self, i: int) -> int:
        """c_i in the charpoly convention sum_i c_i x^(n-i)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def low_first(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.low_first(), other.low_first()
        k = max(len(a), len(b))
        a += [0] * (k - len(a))
        b += [0] * (k - len(b))
        return IntPolynomial.from_low(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * x for x in self.coeffs))
        a, b = self.low_first(), other.low_first()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial.from_low(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPolynomial(self.coeffs + (0,) * k)

    def reflect(self) -> "IntPolynomial":
        """p(-x)."""
        n = len(self.coeffs) - 1
        return IntPolynomial(tuple(c if (n - i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def derivative(self) -> "IntPolynomial":
        n = len(self.coeffs) - 1
        if n == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(c * (n - i) for i, c in enumerate(self.coeffs[:-1])))

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    def to_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(tuple(int(s) for s in json.loads(text)))

    def __str__(self) -> str:
        return self.format("λ")

    def format(self, var: str = "λ") -> str:
        if self.is_zero():
            return "0"
        n = len(self.coeffs) - 1
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            d = n - i
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + (f"^{d}" if d > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


# Rational polynomial helpers. Coefficient lists are highest degree first, no leading zeros
# (the zero polynomial is []).


def _strip(c: Sequence[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(c) and c[i] == 0:
        i += 1
    return list(c[i:])


def _frac(p: IntPolynomial | Sequence[Rational]) -> list[Fraction]:
    coeffs = p.coeffs if isinstance(p, IntPolynomial) else p
    return _strip([Fraction(x) for x in coeffs])


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q: list[Fraction] = []
    while len(a) >= len(b):
        f = a[0] / b[0]
        q.append(f)
        for j in range(len(b)):
            a[j] -= f * b[j]
        a.pop(0)
    return q, _strip(a)


def _monic(a: list[Fraction]) -> list[Fraction]:
    return [x / a[0] for x in a] if a else a


def _deriv(a: list[Fraction]) -> list[Fraction]:
    n = len(a) - 1
    return _strip([c * (n - i) for i, c in enumerate(a[:-1])])


def poly_gcd(a, b) -> list[Fraction]:
    """Monic gcd over Q."""
    x, y = _frac(a), _frac(b)
    while y:
        _, r = _divmod(x, y)
        x, y = y, r
    return _monic(x)


def square_free(p) -> list[Fraction]:
    """p / gcd(p, p'), monic: same distinct roots, all simple."""
    a = _frac(p)
    if len(a) <= 1:
        return _monic(a)
    g = poly_gcd(a, _deriv(a))
    q, r = _divmod(a, g)
    assert not r
    return _monic(q)


def sturm_chain(p) -> list[list[Fraction]]:
    """Sturm chain of the square-free part of p."""
    p0 = square_free(p)
    chain = [p0]
    if len(p0) <= 1:
        return chain
    p1 = _deriv(p0)
    while p1:
        chain.append(p1)
        _, r = _divmod(chain[-2], chain[-1])
        p1 = [-x for x in r]
    return chain


def _eval(a: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in a:
        acc = acc * x + c
    return acc


def _sign_at(a: list[Fraction], x: Endpoint, upper: bool) -> int:
    if x is None:
        lead = a[0]
        deg = len(a) - 1
        s = 1 if lead > 0 else -1
        return s if upper or deg % 2 == 0 else -s
    v = _eval(a, Fraction(x))
    return (v > 0) - (v < 0)


def _variations(chain: list[list[Fraction]], x: Endpoint, upper: bool) -> int:
    signs = [s for s in (_sign_at(a, x, upper) for a in chain) if s != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots(p, lo: Endpoint = None, hi: Endpoint = None, chain=None) -> int:
    """Number of distinct real roots of p in (lo, hi]; None stands for -inf / +inf."""
    chain = chain if chain is not None else sturm_chain(p)
    if len(chain[0]) <= 1:
        return 0
    return _variations(chain, lo, upper=False) - _variations(chain, hi, upper=True)


def is_root(p, x: Rational) -> bool:
    return _eval(_frac(p), Fraction(x)) == 0


def root_bound(p) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    a = _frac(p)
    if len(a) <= 1:
        return Fraction(1)
    return 1 + max(abs(c / a[0]) for c in a[1:])


def compare_largest_roots(a, b, max_iter: int = 100_000) -> int:
    """sign(max real root of a - max real root of b), decided exactly.

    Both polynomials must have at least one real root.
    """
    ca, cb = sturm_chain(a), sturm_chain(b)
    g = poly_gcd(ca[0], cb[0])
    cg = sturm_chain(g) if len(g) > 1 else None
    bound = max(root_bound(ca[0]), root_bound(cb[0])) + 1
    lo, hi = -bound, bound
    if count_roots(None, lo, hi, ca) == 0 or count_roots(None, lo, hi, cb) == 0:
        raise ValueError("both polynomials need a real root")
    for _ in range(max_iter):
        # invariant: b has a root in (lo, hi] and none above hi
        if count_roots(None, hi, None, ca) > 0:
            return 1
        if count_roots(None, lo, None, ca) == 0:
            return -1
        if (
            cg is not None
            and count_roots(None, lo, hi, cb) == 1
            and count_roots(None, lo, hi, ca) == 1
            and count_roots(None, lo, hi, cg) == 1
        ):
            return 0
        mid = (lo + hi) / 2
        if count_roots(None, mid, hi, cb) > 0:
            lo = mid
        else:
            hi = mid
    raise RuntimeError("root comparison did not terminate")


def largest_root_interval(p, width: Fraction = Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi] containing the largest real root of p, of width at most ``width``."""
    chain = sturm_chain(p)
    bound = root_bound(chain[0]) + 1
    lo, hi = -bound, bound
    if count_roots(None, lo, hi, chain) == 0:
        raise ValueError("no real root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots(None, mid, hi, chain) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi
