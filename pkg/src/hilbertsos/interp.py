"""Lagrange interpolation on the triangular lattice and the gondola family."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .hilbert import DEFAULT_SAMPLES, DEFAULT_SEED, max_perturbation
from .polycore import Poly, evaluate, variables


def falling(p: Poly, m: int) -> Poly:
    """(p)_m = p (p - 1) ... (p - m + 1)."""
    if m < 0:
        raise ValueError("falling product needs m >= 0")
    out = Poly.const(1, p.nvars)
    for j in range(m):
        out = out * (p - j)
    return out


def falling_value(t, m: int) -> Fraction:
    if m < 0:
        raise ValueError("falling product needs m >= 0")
    out = Fraction(1)
    for j in range(m):
        out *= Fraction(t) - j
    return out


@dataclass(frozen=True)
class TriangleLattice:
    d: int

    @property
    def points(self) -> list[tuple[int, int]]:
        return triangle_points(self.d)

    def __len__(self) -> int:
        return (self.d + 1) * (self.d + 2) // 2

    def __contains__(self, rs) -> bool:
        r, s = rs
        return r >= 0 and s >= 0 and r + s <= self.d


def triangle_points(d: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]


def biermann(r: int, s: int, d: int) -> Poly:
    """Lagrange basis element of T_d that is 1 at (r, s) and 0 at the other lattice points."""
    if (r, s) not in TriangleLattice(d):
        raise ValueError(f"({r}, {s}) is not in T_{d}")
    x, y = variables(2)
    num = falling(x, r) * falling(y, s) * falling(d - x - y, d - r - s)
    return num / (factorial(r) * factorial(s) * factorial(d - r - s))


def interpolate(values: dict[tuple[int, int], Fraction], d: int) -> Poly:
    """The polynomial of degree <= d with the given values on T_d."""
    return sum((Fraction(values[rs]) * biermann(*rs, d) for rs in triangle_points(d)), Poly(2))


def triangle_basis(B: Iterable[tuple[int, int]], d: int) -> list[Poly]:
    """Basis of the degree-d polynomials vanishing on T_d minus B."""
    B = list(B)
    lattice = TriangleLattice(d)
    bad = [rs for rs in B if rs not in lattice]
    if bad:
        raise ValueError(f"points {bad} are not in T_{d}")
    return [biermann(r, s, d) for r, s in B]


def gondola_points(d: int) -> list[tuple[int, int]]:
    return [rs for rs in triangle_points(d) if rs not in ((d, 0), (0, d))]


def gondola_forced(d: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(d) for j in range(d) if i + j >= d + 1]


def gondola_g(d: int) -> Poly:
    x, y = variables(2)
    return falling(x, 2) * falling(y, 2) * falling(x + y - 2, d - 1) * falling(x + y - 4, d - 3)


@dataclass(frozen=True)
class GondolaInstance:
    d: int
    points: tuple[tuple[int, int], ...]
    forced: tuple[tuple[int, int], ...]
    f1: Poly
    f2: Poly
    g: Poly

    @property
    def f(self) -> Poly:
        return self.f1 * self.f1 + self.f2 * self.f2

    def p(self, c) -> Poly:
        return self.f + Fraction(c) * self.g

    def min_zero_count(self) -> int:
        return (self.d * self.d + 3 * self.d - 2) // 2


def gondola(d: int) -> GondolaInstance:
    """f1 = (x)_d, f2 = (y)_d and the singular sextic-type term g_d, with exact checks."""
    if d < 3:
        raise ValueError("the gondola construction needs d >= 3")
    x, y = variables(2)
    pts = gondola_points(d)
    forced = gondola_forced(d)
    g = gondola_g(d)
    gx, gy = g.gradient()
    for pt in pts:
        if evaluate(g, pt) != 0 or evaluate(gx, pt) != 0 or evaluate(gy, pt) != 0:
            raise ArithmeticError(f"g_{d} is not singular at {pt}")
    for pt in forced:
        if evaluate(g, pt) <= 0:
            raise ArithmeticError(f"g_{d} is not positive at {pt}")
    return GondolaInstance(d, tuple(pts), tuple(forced), falling(x, d), falling(y, d), g)


def gondola_max_c(d: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, refine: int = 32):
    """Numerical sup of c keeping f1^2 + f2^2 + c g_d psd, searched over the box [-1, d]^2."""
    inst = gondola(d)
    return max_perturbation(inst.f, inst.g, samples=samples, seed=seed, refine=refine,
                            box=([-1.0, -1.0], [float(d), float(d)]))
