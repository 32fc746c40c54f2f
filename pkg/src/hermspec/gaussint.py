"""Exact Gaussian integers a + bi over Python's arbitrary-precision ints."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

Number = Union["GaussInt", int]


@dataclass(frozen=True, slots=True)
class GaussInt:
    re: int = 0
    im: int = 0

    @staticmethod
    def coerce(x: Number) -> "GaussInt":
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return GaussInt(x, 0)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussInt")

    @staticmethod
    def unit(k: int) -> "GaussInt":
        """i**k for any integer k."""
        return _UNITS[k % 4]

    def __add__(self, other: Number) -> "GaussInt":
        o = GaussInt.coerce(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "GaussInt":
        o = GaussInt.coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "GaussInt":
        return GaussInt.coerce(other) - self

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: Number) -> "GaussInt":
        o = GaussInt.coerce(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, k: int) -> "GaussInt":
        """Divide by a nonzero rational integer, raising if the quotient is not integral."""
        if k == 0:
            raise ZeroDivisionError("division by zero")
        if self.re % k or self.im % k:
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return GaussInt(self.re // k, self.im // k)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def unit_exponent(self) -> int:
        """The k in {0,1,2,3} with self == i**k; raises for non-units."""
        for k, u in enumerate(_UNITS):
            if self == u:
                return k
        raise ValueError(f"{self} is not a unit")

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"{self.re}{sign}{'' if mag == 1 else mag}i"

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
_UNITS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))
