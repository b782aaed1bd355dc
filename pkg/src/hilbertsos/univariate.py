"""Dense univariate polynomials over Q and real root isolation.

A univariate polynomial is a list of Fractions, constant term first.
Roots are isolated with Sturm sequences and bisection; rational roots
are recognised exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from . import linalg
from .polycore import Poly

UPoly = list[Fraction]


def trim(p: Sequence) -> UPoly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def evaluate(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Sequence, q: Sequence) -> UPoly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def scale(p: Sequence, c) -> UPoly:
    return trim([a * c for a in p])


def sub(p: Sequence, q: Sequence) -> UPoly:
    return add(p, scale(q, -1))


def mul(p: Sequence, q: Sequence) -> UPoly:
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p: Sequence, q: Sequence) -> tuple[UPoly, UPoly]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    lc = q[-1]
    while len(rem) >= len(q) and rem:
        k = len(rem) - len(q)
        f = rem[-1] / lc
        quot[k] = f
        for i, b in enumerate(q):
            rem[i + k] -= f * b
        rem = trim(rem)
    return trim(quot), rem


def derivative(p: Sequence) -> UPoly:
    return trim([i * p[i] for i in range(1, len(p))])


def monic(p: Sequence) -> UPoly:
    p = trim(p)
    return [c / p[-1] for c in p] if p else []


def poly_gcd(p: Sequence, q: Sequence) -> UPoly:
    """Monic gcd; gcd(0, q) is monic(q) and gcd(0, 0) is the zero polynomial."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def primitive(p: Sequence) -> list[int]:
    """Integer polynomial with positive leading coefficient and content 1."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def square_free(p: Sequence) -> UPoly:
    p = trim(p)
    if len(p) <= 2:
        return monic(p)
    g = poly_gcd(p, derivative(p))
    return monic(divmod_(p, g)[0])


def sturm_sequence(p: Sequence) -> list[UPoly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = divmod_(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(scale(r, -1))
    return [s for s in seq if s]


def _sign_changes(seq: Sequence[UPoly], x) -> int:
    signs = []
    for s in seq:
        v = evaluate(s, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: Sequence[UPoly], a, b) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def cauchy_bound(p: Sequence) -> Fraction:
    p = trim(p)
    lc = abs(p[-1])
    return 1 + max((abs(c) / lc for c in p[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RealRoot:
    """A real root of a square-free polynomial, isolated in [lo, hi].

    When ``exact`` is set the root is that rational and lo == hi == exact.
    Otherwise the root lies strictly inside (lo, hi), the polynomial has
    opposite nonzero signs at the endpoints and no other root in between.
    """

    poly: tuple[Fraction, ...]
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)

    def midpoint(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def refine(self, width) -> RealRoot:
        width = Fraction(width)
        if self.exact is not None or self.hi - self.lo <= width:
            return self
        lo, hi = self.lo, self.hi
        slo = evaluate(self.poly, lo) > 0
        while hi - lo > width:
            m = (lo + hi) / 2
            v = evaluate(self.poly, m)
            if v == 0:
                return RealRoot(self.poly, m, m, m)
            if (v > 0) == slo:
                lo = m
            else:
                hi = m
        return RealRoot(self.poly, lo, hi, None)

    def compare(self, x) -> int:
        """Sign of (root - x), decided exactly."""
        x = Fraction(x)
        if self.exact is not None:
            return (self.exact > x) - (self.exact < x)
        if x <= self.lo:
            return 1
        if x >= self.hi:
            return -1
        v = evaluate(self.poly, x)
        if v == 0:
            return 0
        return 1 if (v > 0) == (evaluate(self.poly, self.lo) > 0) else -1


def _finish(sqf: UPoly, lo: Fraction, hi: Fraction) -> RealRoot:
    """Make endpoints nonzero, then try to recognise a rational root."""
    seq = sturm_sequence(sqf)
    # the root lies in (lo, hi]; move endpoints off any other root
    if evaluate(sqf, hi) == 0:
        return RealRoot(tuple(sqf), hi, hi, hi)
    while evaluate(sqf, lo) == 0:
        m = (lo + hi) / 2
        if evaluate(sqf, m) == 0:
            return RealRoot(tuple(sqf), m, m, m)
        if count_roots(seq, m, hi) == 1:
            lo = m
        else:
            hi = m
    root = RealRoot(tuple(sqf), lo, hi, None)
    ints = primitive(sqf)
    lc = abs(ints[-1])
    # distinct rationals with denominator <= lc are at least 1/lc^2 apart
    narrow = root.refine(Fraction(1, 4 * lc * lc))
    if narrow.exact is not None:
        return narrow
    cand = narrow.midpoint().limit_denominator(lc)
    if narrow.lo < cand < narrow.hi and evaluate(sqf, cand) == 0:
        return RealRoot(tuple(sqf), cand, cand, cand)
    return root


def real_roots(p: Sequence, lo=None, hi=None) -> list[RealRoot]:
    """Isolate all distinct real roots (optionally only those in (lo, hi]), ascending."""
    p = trim(p)
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    if len(p) == 1:
        return []
    sqf = square_free(p)
    seq = sturm_sequence(sqf)
    bound = cauchy_bound(sqf)
    a = Fraction(lo) if lo is not None else -bound
    b = Fraction(hi) if hi is not None else bound
    out: list[RealRoot] = []
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        n = count_roots(seq, x, y)
        if n == 0:
            continue
        if n == 1:
            out.append(_finish(sqf, x, y))
            continue
        m = (x + y) / 2
        stack.append((m, y))
        stack.append((x, m))
    out.sort(key=lambda r: r.lo)
    return out


def positive_roots(p: Sequence) -> list[RealRoot]:
    p = trim(p)
    if not p or len(p) == 1:
        return [] if p else real_roots(p)
    return [r for r in real_roots(p, 0, cauchy_bound(square_free(p))) if r.compare(0) > 0]


def multiplicity(p: Sequence, root: RealRoot) -> int:
    """Multiplicity of ``root`` as a root of p (p need not be square-free)."""
    p = trim(p)
    k = 0
    while p:
        if root.exact is not None:
            if evaluate(p, root.exact) != 0:
                return k
        else:
            g = poly_gcd(p, root.poly)
            if degree(g) <= 0 or count_roots(sturm_sequence(g), root.lo, root.hi) == 0:
                return k
        k += 1
        p = derivative(p)
    return k


# ---------------------------------------------------------------------------
# resultants


def sylvester(p: Sequence, q: Sequence, m: int, n: int) -> list[list[Fraction]]:
    """Sylvester matrix of p (formal degree m) and q (formal degree n), highest coefficients first."""
    pc = [Fraction(p[i]) if i < len(p) else Fraction(0) for i in range(m + 1)][::-1]
    qc = [Fraction(q[i]) if i < len(q) else Fraction(0) for i in range(n + 1)][::-1]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def _interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UPoly:
    """Newton divided differences, expanded to the monomial basis."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out: UPoly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        out = add(mul(out, [-xs[i], Fraction(1)]), [coef[i]])
    return trim(out)


def as_univariate(p: Poly, var: int) -> UPoly:
    """Coefficients of a polynomial that depends on variable ``var`` only."""
    out: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        if any(k for i, k in enumerate(e) if i != var):
            raise ValueError("polynomial depends on more than one variable")
        out[e[var]] = c
    return trim([out.get(i, Fraction(0)) for i in range(max(out, default=-1) + 1)])


def from_univariate(p: Sequence, var: int, nvars: int) -> Poly:
    terms = {}
    for i, c in enumerate(p):
        e = [0] * nvars
        e[var] = i
        terms[tuple(e)] = c
    return Poly(nvars, terms)


def specialize(p: Poly, keep: int, values: dict[int, Fraction]) -> UPoly:
    """Substitute rational values for every variable except ``keep``."""
    out: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        term = c
        for i, k in enumerate(e):
            if i != keep and k:
                term *= Fraction(values[i]) ** k
        out[e[keep]] = out.get(e[keep], 0) + term
    return trim([out.get(i, Fraction(0)) for i in range(max(out, default=-1) + 1)])


def resultant(f: Poly, g: Poly, eliminate: int) -> UPoly:
    """Res_{eliminate}(f, g) for bivariate f, g, as a univariate polynomial in the other variable.

    Computed by evaluating the Sylvester determinant at enough rational
    abscissae and interpolating; the formal degrees are the degrees of f
    and g in the eliminated variable.
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("resultant expects bivariate polynomials")
    keep = 1 - eliminate
    m, n = f.degree_in(eliminate), g.degree_in(eliminate)
    if f.is_zero() or g.is_zero():
        return []
    bound = f.degree() * g.degree()
    xs = [Fraction(i) for i in range(bound + 1)]
    ys = []
    for x in xs:
        fu = specialize(f, eliminate, {keep: x})
        gu = specialize(g, eliminate, {keep: x})
        ys.append(linalg.det(sylvester(fu, gu, m, n)) if m + n else Fraction(1))
    return _interpolate(xs, ys)
