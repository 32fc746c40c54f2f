"""Named undirected graph families and their orientations with prescribed cycle signs.

Vertex numbering is fixed per family so fixtures stay stable:

* ``P n``              path 0-1-...-(n-1)
* ``C n``              cycle 0-1-...-(n-1)-0
* ``S(n1,...,nk)``     centre 0, then arm j as a path hanging off 0, arms in order
* ``K1,m``             centre 0, leaves 1..m
* ``Y(r,s,t)``         path v1..v_L (L = r+s+t-1) as 0..L-1, pendant L at v_r, pendant L+1 at v_{r+s}
* ``D(r,s,t)``         C_r on 0..r-1, C_s on r..r+s-1, then the t-2 inner vertices of the path 0 ... r
* ``theta(r,s,t)``     ends 0 and 1, then the inner vertices of P_r, P_s, P_t in order
* ``Cn(k1,...,kn)``    cycle 0..n-1, then for each i in order a path of k_i new vertices off vertex i
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .canon import certificate
from .graph import MixedGraph
from .orient import cycle_exponents, incidence, orient, orientation_digits
from .structure import Cycle, CycleSign, enumerate_cycles


class FamilyError(ValueError):
    pass


def _path_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise FamilyError("P_n needs n >= 1")

    def generate(self) -> MixedGraph:
        return MixedGraph.build(self.n, _path_edges(list(range(self.n))))

    def __str__(self):
        return f"P{self.n}"


@dataclass(frozen=True)
class CycleFamily:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise FamilyError("C_n needs n >= 3")

    def generate(self) -> MixedGraph:
        vs = list(range(self.n))
        return MixedGraph.build(self.n, _path_edges(vs) + [(self.n - 1, 0)])

    def __str__(self):
        return f"C{self.n}"


@dataclass(frozen=True)
class StarLike:
    arms: tuple[int, ...]

    def __post_init__(self):
        if not self.arms or min(self.arms) < 1:
            raise FamilyError("S(n1,...,nk) needs k >= 1 and every n_i >= 1")

    def generate(self) -> MixedGraph:
        edges = []
        nxt = 1
        for length in self.arms:
            arm = list(range(nxt, nxt + length))
            edges += _path_edges([0] + arm)
            nxt += length
        return MixedGraph.build(nxt, edges)

    def __str__(self):
        return "S(" + ",".join(map(str, self.arms)) + ")"


@dataclass(frozen=True)
class Star:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise FamilyError("K_{1,m} needs m >= 1")

    def generate(self) -> MixedGraph:
        return MixedGraph.build(self.m + 1, [(0, j) for j in range(1, self.m + 1)])

    def __str__(self):
        return f"K1,{self.m}"


@dataclass(frozen=True)
class Y:
    r: int
    s: int
    t: int

    def __post_init__(self):
        if self.r < 2 or self.t < 2 or self.s < 0:
            raise FamilyError("Y(r,s,t) needs r >= 2, t >= 2, s >= 0 (pendants sit on inner path vertices)")

    def generate(self) -> MixedGraph:
        L = self.r + self.s + self.t - 1
        edges = _path_edges(list(range(L)))
        edges += [(self.r - 1, L), (self.r + self.s - 1, L + 1)]
        return MixedGraph.build(L + 2, edges)

    def __str__(self):
        return f"Y({self.r},{self.s},{self.t})"


@dataclass(frozen=True)
class Dumbbell:
    r: int
    s: int
    t: int

    def __post_init__(self):
        if self.r < 3 or self.s < 3 or self.t < 2:
            raise FamilyError("D(r,s,t) needs r, s >= 3 and a joining path P_t with t >= 2")

    def generate(self) -> MixedGraph:
        r, s, t = self.r, self.s, self.t
        edges = _path_edges(list(range(r))) + [(r - 1, 0)]
        edges += _path_edges(list(range(r, r + s))) + [(r + s - 1, r)]
        inner = list(range(r + s, r + s + t - 2))
        edges += _path_edges([0] + inner + [r])
        return MixedGraph.build(r + s + t - 2, edges)

    def __str__(self):
        return f"D({self.r},{self.s},{self.t})"


@dataclass(frozen=True)
class Theta:
    r: int
    s: int
    t: int

    def __post_init__(self):
        lengths = (self.r, self.s, self.t)
        if min(lengths) < 2 or sum(x == 2 for x in lengths) > 1:
            raise FamilyError("theta(r,s,t) needs r, s, t >= 2 with at most one equal to 2")

    def generate(self) -> MixedGraph:
        edges = []
        nxt = 2
        for length in (self.r, self.s, self.t):
            inner = list(range(nxt, nxt + length - 2))
            edges += _path_edges([0] + inner + [1])
            nxt += length - 2
        return MixedGraph.build(nxt, edges)

    def __str__(self):
        return f"theta({self.r},{self.s},{self.t})"


@dataclass(frozen=True)
class CycleWithPaths:
    n: int
    paths: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise FamilyError("C_n(k1,...) needs n >= 3")
        if len(self.paths) > self.n or any(k < 0 for k in self.paths):
            raise FamilyError("C_n(k1,...,kt) needs t <= n and every k_i >= 0")
        object.__setattr__(self, "paths", tuple(self.paths) + (0,) * (self.n - len(self.paths)))

    def generate(self) -> MixedGraph:
        n = self.n
        edges = _path_edges(list(range(n))) + [(n - 1, 0)]
        nxt = n
        for i, k in enumerate(self.paths):
            edges += _path_edges([i] + list(range(nxt, nxt + k)))
            nxt += k
        return MixedGraph.build(nxt, edges)

    def __str__(self):
        ks = list(self.paths)
        while ks and ks[-1] == 0:
            ks.pop()
        return f"C{self.n}" + ("(" + ",".join(map(str, ks)) + ")" if ks else "")


FamilySpec = Union[Path, CycleFamily, StarLike, Star, Y, Dumbbell, Theta, CycleWithPaths]

_INT_LIST = r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)"


def parse_family(text: str) -> FamilySpec:
    """Parse the family grammar: ``P7``, ``C5``, ``C6(1,0,1,0,1)``, ``S(1,3,3)``, ``Y(2,4,2)``,
    ``D(3,4,2)``, ``theta(3,5,5)``, ``K1,4``."""
    s = text.strip()

    def ints(body: str) -> tuple[int, ...]:
        return tuple(int(x) for x in body.split(","))

    if m := re.fullmatch(r"P(\d+)", s):
        return Path(int(m.group(1)))
    if m := re.fullmatch(r"C(\d+)", s):
        return CycleFamily(int(m.group(1)))
    if m := re.fullmatch(r"C(\d+)" + _INT_LIST, s):
        return CycleWithPaths(int(m.group(1)), ints(m.group(2)))
    if m := re.fullmatch(r"K_?\{?1\s*,\s*(\d+)\}?", s):
        return Star(int(m.group(1)))
    if m := re.fullmatch(r"S" + _INT_LIST, s):
        return StarLike(ints(m.group(1)))
    for name, cls in (("Y", Y), ("D", Dumbbell), ("theta", Theta)):
        if m := re.fullmatch(name + _INT_LIST, s):
            args = ints(m.group(1))
            if len(args) != 3:
                raise FamilyError(f"{name} takes three parameters")
            return cls(*args)
    raise FamilyError(f"unrecognised family {text!r}")


def generate(spec: FamilySpec | str) -> MixedGraph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    return spec.generate()


class SignClass(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    STAR = "star"

    def admits(self, sign: CycleSign) -> bool:
        if self is SignClass.PLUS:
            return sign is CycleSign.POSITIVE
        if self is SignClass.MINUS:
            return sign is CycleSign.NEGATIVE
        return sign.is_imaginary

    def admits_exponent(self, k):
        """Vectorized ``admits`` on exponents k of i."""
        if self is SignClass.PLUS:
            return k == 0
        if self is SignClass.MINUS:
            return k == 2
        return k % 2 == 1


SignAssignment = dict[Cycle, SignClass]


class Unrealizable(ValueError):
    def __init__(self, cycle: Cycle, target: SignClass):
        self.cycle = cycle
        self.target = target
        super().__init__(f"no orientation makes cycle {cycle} {target.value}")


def orient_with_signs(G: MixedGraph, target: SignAssignment) -> MixedGraph:
    """Lexicographically least orientation of G whose cycles match ``target``.

    Depth-first over edge digits (0 undirected, 1 forward, 2 backward); a cycle is checked as
    soon as its last edge is fixed.
    """
    if not G.is_undirected():
        raise ValueError("orient_with_signs expects an undirected graph")
    cycles = enumerate_cycles(G)
    if set(target) != set(cycles):
        raise ValueError("target keys must be exactly the cycles of G")
    inc = incidence(G, cycles)
    closing: list[list[int]] = [[] for _ in range(G.m)]
    for j in range(len(cycles)):
        closing[int(np.nonzero(inc[:, j])[0].max())].append(j)
    exps = [0, 1, 3]
    digits = [0] * G.m
    acc = [0] * len(cycles)
    deepest: list = [-1, None]

    def rec(t: int) -> bool:
        if t == G.m:
            return True
        for d in range(3):
            for j in range(len(cycles)):
                if inc[t, j]:
                    acc[j] += inc[t, j] * exps[d]
            ok = True
            for j in closing[t]:
                if not target[cycles[j]].admits(CycleSign.from_exponent(acc[j])):
                    ok = False
                    if t > deepest[0]:
                        deepest[0], deepest[1] = t, cycles[j]
                    break
            if ok:
                digits[t] = d
                if rec(t + 1):
                    return True
            for j in range(len(cycles)):
                if inc[t, j]:
                    acc[j] -= inc[t, j] * exps[d]
        return False

    if not rec(0):
        cycle = deepest[1]
        raise Unrealizable(cycle, target[cycle])
    return orient(G, digits)


def family_member_digits(G: MixedGraph, signclass: SignClass) -> np.ndarray:
    """Digit rows of every orientation of G whose cycles all fall in ``signclass``."""
    cycles = enumerate_cycles(G)
    digits = orientation_digits(G.m)
    if not cycles:
        return digits
    exps = cycle_exponents(digits, incidence(G, cycles))
    return digits[np.all(signclass.admits_exponent(exps), axis=1)]


def enumerate_family_members(spec: FamilySpec | str | MixedGraph, signclass: SignClass | str) -> list[MixedGraph]:
    """All mixed graphs in G^+ / G^- / G^* for G = generate(spec), by exhaustive orientation."""
    G = spec if isinstance(spec, MixedGraph) else generate(spec)
    signclass = SignClass(signclass) if isinstance(signclass, str) else signclass
    return [orient(G, row) for row in family_member_digits(G, signclass)]


SMITH_SPORADIC = (StarLike((2, 2, 2)), StarLike((1, 3, 3)), StarLike((1, 2, 5)))


def smith_templates(n: int) -> list[tuple[FamilySpec, MixedGraph]]:
    """Connected undirected graphs on n vertices with spectral radius exactly 2."""
    out: list[tuple[FamilySpec, MixedGraph]] = []
    if n >= 3:
        out.append((CycleFamily(n), CycleFamily(n).generate()))
    if n >= 5:
        y = Y(2, n - 5, 2)
        out.append((y, y.generate()))
    for spec in SMITH_SPORADIC:
        g = spec.generate()
        if g.n == n:
            out.append((spec, g))
    seen = set()
    unique = []
    for spec, g in out:
        cert = certificate(g)
        if cert not in seen:
            seen.add(cert)
            unique.append((spec, g))
    return unique


def smith_graphs(n: int) -> list[MixedGraph]:
    if n < 1:
        raise ValueError("n >= 1")
    return [g for _, g in smith_templates(n)]
