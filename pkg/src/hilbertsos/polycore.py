"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` is a mapping from exponent tuples to nonzero ``Fraction``
coefficients, together with the number of variables. Variables are
positional; names only matter for text/JSON rendering.

Canonical term order is graded lexicographic, largest first.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, isqrt
from typing import Iterable, Mapping, Sequence

from . import linalg

Rational = Fraction
Exponent = tuple[int, ...]


class ArityError(ValueError):
    """Number of variables or coordinates does not match."""


class NotHomogeneousError(ValueError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted; use Fraction or a 'p/q' string")
    return Fraction(c)


def grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


def default_names(nvars: int) -> tuple[str, ...]:
    if nvars <= 4:
        return ("x", "y", "z", "w")[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


class Poly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.nvars = int(nvars)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars:
                raise ArityError(f"exponent {exp} has length {len(exp)}, expected {self.nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _frac(c)
            if c:
                c = clean.get(exp, 0) + c
                if c:
                    clean[exp] = c
                else:
                    clean.pop(exp, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Poly:
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c, nvars: int) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, index: int, nvars: int) -> Poly:
        if not 0 <= index < nvars:
            raise ArityError(f"variable index {index} out of range for {nvars} variables")
        exp = tuple(int(i == index) for i in range(nvars))
        return cls._raw(nvars, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> Poly:
        return cls(len(exp), {tuple(exp): c})

    # -- basic protocol -------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded lex, descending) order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, '{to_text(self)}')"

    def __str__(self) -> str:
        return to_text(self)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ArityError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> Poly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                c = _frac(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw(self.nvars, {})
            return Poly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        c = _frac(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure --------------------------------------------------------

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, k: int) -> Poly:
        return Poly._raw(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == k})

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def diff(self, index: int) -> Poly:
        out = {}
        for e, c in self._terms.items():
            if e[index]:
                ne = list(e)
                ne[index] -= 1
                out[tuple(ne)] = c * e[index]
        return Poly._raw(self.nvars, out)

    def gradient(self) -> list[Poly]:
        return [self.diff(i) for i in range(self.nvars)]

    def __call__(self, *pt):
        if len(pt) == 1 and isinstance(pt[0], (list, tuple)):
            pt = pt[0]
        return evaluate(self, pt)

    def permute(self, perm: Sequence[int]) -> Poly:
        """Return q with q(x_0, ..., x_{n-1}) = p(x_{perm[0]}, ..., x_{perm[n-1]})."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"{perm} is not a permutation of {self.nvars} variables")
        out = {}
        for e, c in self._terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(perm):
                ne[k] += e[i]
            out[tuple(ne)] = c
        return Poly._raw(self.nvars, out)

    def extend(self, nvars: int, offset: int = 0) -> Poly:
        """Embed in a ring with more variables, shifting existing ones by ``offset``."""
        if nvars < self.nvars + offset:
            raise ArityError("target ring too small")
        out = {}
        for e, c in self._terms.items():
            ne = [0] * nvars
            ne[offset:offset + self.nvars] = e
            out[tuple(ne)] = c
        return Poly._raw(nvars, out)

    def drop_vars(self, keep: Sequence[int]) -> Poly:
        """Restrict to the variables in ``keep``; all others must not occur."""
        keep = list(keep)
        out = {}
        for e, c in self._terms.items():
            if any(e[i] for i in range(self.nvars) if i not in keep):
                raise ValueError("polynomial depends on a dropped variable")
            out[tuple(e[i] for i in keep)] = c
        return Poly._raw(len(keep), out)

    def substitute(self, index: int, value) -> Poly:
        """Set variable ``index`` to a rational value, keeping the arity."""
        v = _frac(value)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            ne = list(e)
            k = ne[index]
            ne[index] = 0
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c * v ** k
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def coefficients_in(self, index: int) -> dict[int, Poly]:
        """Split p = sum_k p_k * x_index^k; the p_k keep the full arity."""
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            k = e[index]
            ne = list(e)
            ne[index] = 0
            parts.setdefault(k, {})[tuple(ne)] = c
        return {k: Poly._raw(self.nvars, t) for k, t in parts.items()}

    def reverse_in(self, index: int, power: int) -> Poly:
        """x^power * p(..., 1/x, ...) for the variable ``index``."""
        if self.degree_in(index) > power:
            raise ValueError(f"degree in variable {index} exceeds {power}")
        out = {}
        for e, c in self._terms.items():
            ne = list(e)
            ne[index] = power - e[index]
            out[tuple(ne)] = c
        return Poly._raw(self.nvars, out)

    def content(self) -> Fraction:
        """Positive rational c with p / c primitive over Z."""
        from math import gcd, lcm
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def leading(self) -> tuple[Exponent, Fraction]:
        return self.items()[0]


def variables(nvars: int) -> tuple[Poly, ...]:
    return tuple(Poly.var(i, nvars) for i in range(nvars))


def evaluate(p: Poly, pt: Sequence) -> Fraction:
    if len(pt) != p.nvars:
        raise ArityError(f"point has {len(pt)} coordinates, polynomial has {p.nvars} variables")
    pt = [_frac(v) for v in pt]
    total = Fraction(0)
    for e, c in p._terms.items():
        term = c
        for v, k in zip(pt, e):
            if k:
                term *= v ** k
        total += term
    return total


def homogenize(p: Poly, target_degree: int | None = None, new_var_index: int | None = None) -> Poly:
    """Insert a homogenizing variable at ``new_var_index`` (default: last)."""
    deg = p.degree()
    if target_degree is None:
        target_degree = max(deg, 0)
    if target_degree < deg:
        raise ValueError(f"target degree {target_degree} is below deg p = {deg}")
    if new_var_index is None:
        new_var_index = p.nvars
    if not 0 <= new_var_index <= p.nvars:
        raise ArityError("new variable index out of range")
    out = {}
    for e, c in p._terms.items():
        ne = list(e)
        ne.insert(new_var_index, target_degree - sum(e))
        out[tuple(ne)] = c
    return Poly._raw(p.nvars + 1, out)


def dehomogenize(F: Poly, var_index: int | None = None) -> Poly:
    """Set variable ``var_index`` (default: last) to 1 and remove it."""
    if not F.is_homogeneous():
        raise NotHomogeneousError("dehomogenize expects a form")
    if var_index is None:
        var_index = F.nvars - 1
    out: dict[Exponent, Fraction] = {}
    for e, c in F._terms.items():
        ne = e[:var_index] + e[var_index + 1:]
        out[ne] = out.get(ne, 0) + c
    return Poly._raw(F.nvars - 1, {e: c for e, c in out.items() if c})


def compose(outer: Poly, inner: Sequence[Poly]) -> Poly:
    """outer(inner[0], ..., inner[n-1])."""
    if len(inner) != outer.nvars:
        raise ArityError(f"outer has {outer.nvars} variables but {len(inner)} substitutions given")
    if not inner:
        raise ArityError("nothing to substitute")
    m = inner[0].nvars
    if any(q.nvars != m for q in inner):
        raise ArityError("substituted polynomials must share arity")
    cache: dict[tuple[int, int], Poly] = {}

    def power(i: int, k: int) -> Poly:
        if (i, k) not in cache:
            cache[(i, k)] = inner[i] ** k if k < 2 else power(i, k - 1) * inner[i]
        return cache[(i, k)]

    total = Poly(m)
    for e, c in outer._terms.items():
        term = Poly.const(c, m)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def monomials(nvars: int, degree: int, homogeneous: bool = False) -> list[Exponent]:
    """Exponents of total degree ``degree`` (or <= degree), canonical order."""
    degs = [degree] if homogeneous else range(degree, -1, -1)
    out = []
    for d in degs:
        level = []
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            level.append(tuple(e))
        out.extend(sorted(level, reverse=True))
    return out


def coefficient_vector(p: Poly, basis: Sequence[Exponent]) -> list[Fraction]:
    index = {e: i for i, e in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for e, c in p._terms.items():
        if e not in index:
            raise ValueError(f"monomial {e} not in the supplied basis")
        v[index[e]] = c
    return v


def from_vector(vec: Sequence, basis: Sequence[Exponent], nvars: int) -> Poly:
    return Poly(nvars, zip(basis, vec))


def span_rank(polys: Sequence[Poly]) -> int:
    if not polys:
        return 0
    basis = sorted({e for p in polys for e in p._terms}, key=grlex_key, reverse=True)
    if not basis:
        return 0
    return linalg.rank([coefficient_vector(p, basis) for p in polys])


def same_span(a: Sequence[Poly], b: Sequence[Poly]) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def in_span(p: Poly, polys: Sequence[Poly]) -> bool:
    return span_rank(list(polys) + [p]) == span_rank(polys)


def rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def poly_sqrt(p: Poly) -> Poly | None:
    """Exact square root h with h*h == p and positive leading coefficient, or None.

    Classical leading-term extraction in graded lex order. Every new term of
    h must divide the current leading term of the remainder by 2*LT(h), so
    the loop is bounded by the monomials of the half Newton polytope.
    """
    if p.is_zero():
        return Poly(p.nvars)
    (e0, c0) = p.leading()
    if any(k % 2 for k in e0):
        return None
    r0 = rational_sqrt(c0)
    if r0 is None:
        return None
    lead_exp = tuple(k // 2 for k in e0)
    h = Poly.monomial(lead_exp, r0)
    budget = comb(p.degree() // 2 + p.nvars, p.nvars) + 1
    for _ in range(budget):
        rem = p - h * h
        if rem.is_zero():
            return h
        e, c = rem.leading()
        q = tuple(a - b for a, b in zip(e, lead_exp))
        if any(k < 0 for k in q) or grlex_key(q) >= grlex_key(lead_exp):
            return None
        h = h + Poly.monomial(q, c / (2 * r0))
    return None


# ---------------------------------------------------------------------------
# quadratic forms


@dataclass(frozen=True)
class QuadForm:
    """Symmetric rational matrix M; the form is u -> u^T M u."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(_frac(v) for v in row) for row in self.matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("quadratic form matrix must be square")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise ValueError("quadratic form matrix must be symmetric")
        object.__setattr__(self, "matrix", m)

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @classmethod
    def from_poly(cls, q: Poly) -> QuadForm:
        """Matrix of a homogeneous quadratic polynomial."""
        if q.degree() > 2 or not q.is_homogeneous() or (q and q.degree() != 2):
            raise ValueError("expected a quadratic form")
        n = q.nvars
        m = [[Fraction(0)] * n for _ in range(n)]
        for e, c in q._terms.items():
            idx = [i for i in range(n) for _ in range(e[i])]
            i, j = idx
            if i == j:
                m[i][i] = c
            else:
                m[i][j] = m[j][i] = c / 2
        return cls(tuple(tuple(r) for r in m))

    def to_poly(self) -> Poly:
        n = self.dimension
        terms = {}
        for i in range(n):
            for j in range(i, n):
                c = self.matrix[i][j] * (1 if i == j else 2)
                e = [0] * n
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = terms.get(tuple(e), 0) + c
        return Poly(n, terms)

    def value(self, u: Sequence) -> Fraction:
        u = [_frac(a) for a in u]
        n = self.dimension
        return sum((u[i] * self.matrix[i][j] * u[j] for i in range(n) for j in range(n)), Fraction(0))

    def diagonalize(self) -> list[tuple[Fraction, list[Fraction]]]:
        """Lagrange reduction: q(u) = sum d_k (L_k . u)^2 with rational d_k != 0."""
        n = self.dimension
        m = [list(row) for row in self.matrix]
        out = []
        while True:
            v = None
            for i in range(n):
                if m[i][i] != 0:
                    v = [Fraction(int(k == i)) for k in range(n)]
                    break
            if v is None:
                pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
                if pair is None:
                    return out
                v = [Fraction(int(k in pair)) for k in range(n)]
            mv = [linalg.dot(row, v) for row in m]
            qv = linalg.dot(v, mv)
            out.append((qv, [a / qv for a in mv]))
            m = [[m[i][j] - mv[i] * mv[j] / qv for j in range(n)] for i in range(n)]

    def inertia(self) -> tuple[int, int, int]:
        d = self.diagonalize()
        pos = sum(1 for w, _ in d if w > 0)
        neg = len(d) - pos
        return pos, neg, self.dimension - len(d)


def quadform_definiteness(q: QuadForm) -> str:
    pos, neg, zero = q.inertia()
    if neg == 0:
        return "positive_definite" if zero == 0 else "psd_singular"
    if pos == 0:
        return "negative_definite" if zero == 0 else "nsd_singular"
    return "indefinite"


def taylor_quadratic(p: Poly, pt: Sequence) -> QuadForm:
    """Degree-two component of u -> p(pt + u)."""
    if len(pt) != p.nvars:
        raise ArityError(f"point has {len(pt)} coordinates, polynomial has {p.nvars} variables")
    n = p.nvars
    grad = p.gradient()
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            h = evaluate(grad[i].diff(j), pt) / 2
            m[i][j] = m[j][i] = h
    return QuadForm(tuple(tuple(r) for r in m))


def is_singular_at(p: Poly, pt: Sequence) -> bool:
    """p and all first partials vanish at pt."""
    return evaluate(p, pt) == 0 and all(evaluate(g, pt) == 0 for g in p.gradient())


def is_round(p: Poly, pt: Sequence) -> bool:
    if not is_singular_at(p, pt):
        return False
    return quadform_definiteness(taylor_quadratic(p, pt)) == "positive_definite"


def chart(point: Sequence) -> tuple[int, tuple[Fraction, ...]]:
    """Affine chart for a projective point: the index of the coordinate set
    to one (the last nonzero one, so ordinary points use the usual chart)
    and the affine coordinates of the point in it."""
    pt = [_frac(a) for a in point]
    k = max(i for i, a in enumerate(pt) if a != 0)
    return k, tuple(a / pt[k] for i, a in enumerate(pt) if i != k)


def is_round_projective(F: Poly, point: Sequence) -> bool:
    """Roundness of a form at a projective point, judged in an affine chart."""
    k, apt = chart(point)
    return is_round(dehomogenize(F, k), apt)


# ---------------------------------------------------------------------------
# text and JSON


def format_rational(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(str(s).strip())


def _monomial_text(exp: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return " ".join(parts)


def to_text(p: Poly, names: Sequence[str] | None = None) -> str:
    names = tuple(names) if names else default_names(p.nvars)
    if p.is_zero():
        return "0/1"
    out = []
    for i, (e, c) in enumerate(p.items()):
        mono = _monomial_text(e, names)
        body = format_rational(abs(c)) + (f" {mono}" if mono else "")
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_NUMBER = r"\d+(?:/\d+)?"


def from_text(s: str, names: Sequence[str]) -> Poly:
    """Parse signed terms such as ``-3/1 x^2 y^2 z^2 + x^4*y^2``."""
    names = list(names)
    nv = len(names)
    var_re = "|".join(re.escape(n) for n in sorted(names, key=len, reverse=True))
    factor = re.compile(rf"\s*\*?\s*(?:(?P<num>{_NUMBER})|(?P<var>{var_re})(?:\s*\^\s*(?P<exp>\d+))?)")
    text = s.strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict[Exponent, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = re.compile(r"\s*([+-])?\s*").match(text, pos)
        sign = -1 if m.group(1) == "-" else 1
        if m.group(1) is None and not first:
            raise ValueError(f"expected '+' or '-' at position {pos} in {s!r}")
        pos = m.end()
        coef = Fraction(sign)
        exp = [0] * nv
        nfactors = 0
        while pos < len(text):
            fm = factor.match(text, pos)
            if not fm or fm.end() == pos:
                break
            if fm.group("num"):
                coef *= Fraction(fm.group("num"))
            else:
                exp[names.index(fm.group("var"))] += int(fm.group("exp") or 1)
            nfactors += 1
            pos = fm.end()
            if re.match(r"\s*[+-]", text[pos:]):
                break
        if nfactors == 0:
            raise ValueError(f"could not parse term at position {pos} in {s!r}")
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + coef
        first = False
        rest = text[pos:].strip()
        if rest and rest[0] not in "+-":
            raise ValueError(f"unexpected text {rest[:20]!r} in {s!r}")
    return Poly(nv, terms)


def to_json_obj(p: Poly, names: Sequence[str] | None = None) -> dict:
    names = list(names) if names else list(default_names(p.nvars))
    if len(names) != p.nvars:
        raise ArityError("variable names do not match arity")
    return {
        "vars": names,
        "terms": [{"coef": format_rational(c), "exp": list(e)} for e, c in p.items()],
    }


def from_json_obj(obj: Mapping) -> tuple[Poly, list[str]]:
    names = list(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        e = tuple(int(k) for k in t["exp"])
        terms[e] = terms.get(e, 0) + parse_rational(t["coef"])
    return Poly(len(names), terms), names


def dumps(p: Poly, names: Sequence[str] | None = None) -> str:
    return json.dumps(to_json_obj(p, names), indent=None, separators=(",", ":"))


def loads(s: str) -> tuple[Poly, list[str]]:
    return from_json_obj(json.loads(s))
