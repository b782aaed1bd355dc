"""Vanishing ideals of finite point sets and their planar geometry.

Points are exact rationals.  An affine set of n-vectors is handled with
polynomials of degree <= d in n variables; a projective set of
(n+1)-vectors with forms of degree exactly d.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence, Union

from . import linalg
from . import univariate as uv
from .polycore import (
    Poly,
    coefficient_vector,
    default_names,
    dehomogenize,
    evaluate,
    format_rational,
    from_text,
    from_vector,
    homogenize,
    monomials,
    parse_rational,
    to_text,
)


class ConfigurationError(ValueError):
    """The point configuration violates a stated precondition."""


class DependentProductsError(ValueError):
    """The products f_i f_j of an ideal basis are linearly dependent."""


class InfiniteIntersectionError(ValueError):
    """The basis elements share a curve, so their common zero set is infinite."""


class NotSingularError(ValueError):
    """A polynomial fails to vanish to second order on the point set."""


# ---------------------------------------------------------------------------
# point sets


def _proportional(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


@dataclass(frozen=True)
class PointSet:
    points: tuple[tuple[Fraction, ...], ...]
    mode: str = "affine"

    def __post_init__(self):
        if self.mode not in ("affine", "projective"):
            raise ValueError(f"unknown mode {self.mode!r}")
        pts = tuple(tuple(parse_rational(c) for c in p) for p in self.points)
        if pts and len({len(p) for p in pts}) != 1:
            raise ValueError("points have differing dimensions")
        if self.mode == "projective":
            if any(not any(p) for p in pts):
                raise ValueError("the zero vector is not a projective point")
            for a, b in combinations(pts, 2):
                if _proportional(a, b):
                    raise ValueError(f"projective points {a} and {b} coincide")
        elif len(set(pts)) != len(pts):
            raise ValueError("repeated point in affine point set")
        object.__setattr__(self, "points", pts)

    @classmethod
    def affine(cls, points) -> PointSet:
        return cls(tuple(tuple(p) for p in points), "affine")

    @classmethod
    def projective(cls, points) -> PointSet:
        return cls(tuple(tuple(p) for p in points), "projective")

    @property
    def nvars(self) -> int:
        """Number of polynomial variables (coordinates per point)."""
        return len(self.points[0]) if self.points else 0

    @property
    def dimension(self) -> int:
        """Dimension of the ambient affine space."""
        return self.nvars - (self.mode == "projective")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_projective(self) -> PointSet:
        if self.mode == "projective":
            return self
        return PointSet.projective([p + (Fraction(1),) for p in self.points])

    def homogeneous(self) -> list[tuple[Fraction, ...]]:
        return list(self.to_projective().points)

    def subset(self, idx: Sequence[int]) -> PointSet:
        return PointSet(tuple(self.points[i] for i in idx), self.mode)

    def to_json_obj(self) -> dict:
        return {"mode": self.mode, "points": [[format_rational(c) for c in p] for p in self.points]}

    @classmethod
    def from_json_obj(cls, obj) -> PointSet:
        return cls(tuple(tuple(parse_rational(c) for c in p) for p in obj["points"]), obj.get("mode", "affine"))

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def loads(cls, s: str) -> PointSet:
        return cls.from_json_obj(json.loads(s))


def normalize_projective(p: Sequence) -> tuple[Fraction, ...]:
    """Scale so the last nonzero coordinate is 1."""
    p = [Fraction(c) for c in p]
    k = max(i for i, c in enumerate(p) if c)
    return tuple(c / p[k] for c in p)


def _as_pointset(A) -> PointSet:
    if isinstance(A, PointSet):
        return A
    pts = [tuple(p) for p in A]
    return PointSet.affine(pts)


# ---------------------------------------------------------------------------
# planar incidence geometry


@dataclass(frozen=True)
class ConfigReport:
    max_collinear: int
    max_on_conic: int
    all_on_conic: bool
    collinear_witness: tuple[int, ...]
    conic_witness: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "max_collinear": self.max_collinear,
            "max_on_conic": self.max_on_conic,
            "all_on_conic": self.all_on_conic,
            "collinear_witness": list(self.collinear_witness),
            "conic_witness": list(self.conic_witness),
        }


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _veronese(p):
    x, y, z = p
    return [x * x, x * y, y * y, x * z, y * z, z * z]


def geometry_report(A) -> ConfigReport:
    """Largest number of points on a line and on a conic (possibly degenerate)."""
    A = _as_pointset(A)
    if A.dimension != 2:
        raise ConfigurationError("geometry_report needs planar points")
    pts = A.homogeneous()
    r = len(pts)
    if r == 0:
        return ConfigReport(0, 0, True, (), ())

    lines: dict[tuple, frozenset[int]] = {}
    for i, j in combinations(range(r), 2):
        ell = normalize_projective(_cross(pts[i], pts[j]))
        if ell not in lines:
            lines[ell] = frozenset(k for k in range(r) if linalg.dot(ell, pts[k]) == 0)
    line_sets = sorted(set(lines.values()), key=lambda s: (-len(s), sorted(s)))
    if line_sets:
        best_line = line_sets[0]
    else:
        best_line = frozenset({0})
    max_col = len(best_line)

    best_conic: frozenset[int] = frozenset(range(min(r, 5)))
    # nondegenerate or uniquely determined conics through five points
    seen: set[tuple] = set()
    for five in combinations(range(r), 5):
        ns = linalg.nullspace([_veronese(pts[k]) for k in five])
        if len(ns) != 1:
            continue
        conic = tuple(ns[0])
        if conic in seen:
            continue
        seen.add(conic)
        on = frozenset(k for k in range(r) if linalg.dot(conic, _veronese(pts[k])) == 0)
        if len(on) > len(best_conic):
            best_conic = on
    # line pairs; a line through a single extra point is always available
    singles = [frozenset({k}) for k in range(r)]
    candidates = line_sets + singles
    for a, b in combinations(candidates, 2):
        u = a | b
        if len(u) > len(best_conic):
            best_conic = u
    return ConfigReport(
        max_collinear=max_col,
        max_on_conic=len(best_conic),
        all_on_conic=len(best_conic) == r,
        collinear_witness=tuple(sorted(best_line)),
        conic_witness=tuple(sorted(best_conic)),
    )


# ---------------------------------------------------------------------------
# vanishing ideals


@dataclass(frozen=True)
class IdealBasis:
    pointset: PointSet
    degree: int
    order: int
    basis: tuple[Poly, ...]
    condition_matrix_rank: int
    monomials: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i) -> Poly:
        return self.basis[i]

    def expected_lower_bound(self) -> int:
        n = self.pointset.dimension
        total = len(self.monomials)
        return total - len(self.pointset) * comb(n + self.order - 1, n)

    def to_json_obj(self, names=None) -> dict:
        return {
            "pointset": self.pointset.to_json_obj(),
            "degree": self.degree,
            "order": self.order,
            "condition_matrix_rank": self.condition_matrix_rank,
            "basis": [to_text(p, names) for p in self.basis],
        }


def _derivative_multi_indices(nvars: int, order: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(order):
        for e in monomials(nvars, k, homogeneous=True):
            out.append(e)
    return out


def _derivative_row(point, alpha, monos) -> list[Fraction]:
    row = []
    for e in monos:
        c = Fraction(1)
        for ei, ai, v in zip(e, alpha, point):
            if ai > ei:
                c = Fraction(0)
                break
            for j in range(ai):
                c *= ei - j
            c *= v ** (ei - ai)
        row.append(c)
    return row


def condition_matrix(A: PointSet, monos, order: int) -> list[list[Fraction]]:
    rows = []
    for p in A.points:
        for alpha in _derivative_multi_indices(A.nvars, order):
            rows.append(_derivative_row(p, alpha, monos))
    return rows


def _reduced_span(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    if not vectors:
        return []
    red, _ = linalg.rref(vectors)
    return red


def vanishing_basis(A, d: int, s: int = 1) -> IdealBasis:
    """Basis of polynomials of degree <= d (forms of degree d, if projective)
    vanishing to order s at every point, in reduced echelon form."""
    A = _as_pointset(A)
    if len(A) == 0:
        raise ConfigurationError("empty point set")
    if d < 0 or s < 1:
        raise ValueError("need d >= 0 and s >= 1")
    monos = tuple(monomials(A.nvars, d, homogeneous=A.mode == "projective"))
    rows = condition_matrix(A, monos, s)
    rk = linalg.rank(rows)
    ns = _reduced_span(linalg.nullspace(rows, len(monos)))
    basis = tuple(from_vector(v, monos, A.nvars) for v in ns)
    return IdealBasis(A, d, s, basis, rk, monos)


def vanishes_to_order(p: Poly, A, s: int) -> bool:
    A = _as_pointset(A)
    for pt in A.points:
        for alpha in _derivative_multi_indices(A.nvars, s):
            q = p
            for i, k in enumerate(alpha):
                for _ in range(k):
                    q = q.diff(i)
            if evaluate(q, pt) != 0:
                return False
    return True


@dataclass(frozen=True)
class ProductSpan:
    products: tuple[Poly, ...]
    pairs: tuple[tuple[int, int], ...]
    rank: int
    independent: bool


def product_span(basis) -> ProductSpan:
    polys = tuple(basis.basis if isinstance(basis, IdealBasis) else basis)
    if isinstance(basis, IdealBasis) and basis.order != 1:
        raise ValueError("product_span expects an order-one basis")
    pairs = tuple((i, j) for i in range(len(polys)) for j in range(i, len(polys)))
    prods = tuple(polys[i] * polys[j] for i, j in pairs)
    support = sorted({e for p in prods for e in p.terms}, reverse=True)
    rk = linalg.rank([coefficient_vector(p, support) for p in prods]) if support else 0
    return ProductSpan(prods, pairs, rk, rk == len(pairs))


# ---------------------------------------------------------------------------
# dual witnesses and gap elements


@dataclass(frozen=True)
class DualWitness:
    """Linear functional on coefficient vectors that kills every product
    f_i f_j of an ideal basis but not the target polynomial."""

    monomials: tuple[tuple[int, ...], ...]
    functional: tuple[Fraction, ...]
    nvars: int
    annihilated: tuple[Poly, ...]
    value: Fraction = Fraction(1)

    def pair(self, p: Poly) -> Fraction:
        index = {e: i for i, e in enumerate(self.monomials)}
        total = Fraction(0)
        for e, c in p.terms.items():
            if e not in index:
                raise ValueError(f"monomial {e} outside the witness basis")
            total += self.functional[index[e]] * c
        return total

    def verify(self, p: Poly) -> bool:
        return all(self.pair(q) == 0 for q in self.annihilated) and self.pair(p) != 0

    def to_json_obj(self) -> dict:
        return {
            "nvars": self.nvars,
            "monomials": [list(e) for e in self.monomials],
            "functional": [format_rational(c) for c in self.functional],
            "value": format_rational(self.value),
            "annihilated": [to_text(p) for p in self.annihilated],
        }

    @classmethod
    def from_json_obj(cls, obj) -> DualWitness:
        n = int(obj["nvars"])
        names = default_names(n)
        return cls(tuple(tuple(int(k) for k in e) for e in obj["monomials"]),
                   tuple(parse_rational(c) for c in obj["functional"]), n,
                   tuple(from_text(t, names) for t in obj["annihilated"]),
                   parse_rational(obj.get("value", "1")))


def dual_witness(products: Sequence[Poly], p: Poly, monos: Sequence[tuple[int, ...]]) -> DualWitness | None:
    """Functional vanishing on ``products`` with value 1 on p, or None if p is in their span."""
    rows = [coefficient_vector(q, monos) for q in products]
    target = coefficient_vector(p, monos)
    kernel = linalg.nullspace(rows, len(monos)) if rows else linalg.nullspace([], len(monos))
    for v in kernel:
        val = linalg.dot(v, target)
        if val != 0:
            v = [c / val for c in v]
            return DualWitness(tuple(monos), tuple(v), p.nvars, tuple(products), Fraction(1))
    return None


@dataclass(frozen=True)
class GapResult:
    g: Poly
    witness: DualWitness
    order_one: IdealBasis
    order_two: IdealBasis
    products: ProductSpan


def gap_element(A, d: int) -> GapResult | None:
    """An element of I_{2,2d} outside the span of the products of I_{1,d}."""
    A = _as_pointset(A)
    b1 = vanishing_basis(A, d, 1)
    b2 = vanishing_basis(A, 2 * d, 2)
    ps = product_span(b1)
    if not ps.independent:
        raise DependentProductsError(
            f"the {len(ps.products)} products of the degree-{d} basis have rank {ps.rank}"
        )
    monos = b2.monomials
    span = linalg.EchelonSpan(len(monos))
    for q in ps.products:
        span.add(coefficient_vector(q, monos))
    for q in b2.basis:
        rem = span.reduce(coefficient_vector(q, monos))
        if any(rem):
            g = from_vector(rem, monos, A.nvars)
            w = dual_witness(ps.products, g, monos)
            return GapResult(g, w, b1, b2, ps)
    return None


# ---------------------------------------------------------------------------
# interval arithmetic on rational boxes


def _imul(a, b):
    c = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(c), max(c))


def _ipow(a, k):
    if k == 0:
        return (Fraction(1), Fraction(1))
    lo, hi = a
    if k % 2 == 1:
        return (lo ** k, hi ** k)
    if lo >= 0:
        return (lo ** k, hi ** k)
    if hi <= 0:
        return (hi ** k, lo ** k)
    return (Fraction(0), max(lo ** k, hi ** k))


def interval_eval(p: Poly, box: Sequence[tuple[Fraction, Fraction]]) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for e, c in p.terms.items():
        t = (c, c)
        for iv, k in zip(box, e):
            if k:
                t = _imul(t, _ipow(iv, k))
        lo += t[0]
        hi += t[1]
    return lo, hi


Coordinate = Union[Fraction, uv.RealRoot]


def _coord_box(c: Coordinate) -> tuple[Fraction, Fraction]:
    if isinstance(c, uv.RealRoot):
        return (c.lo, c.hi)
    return (Fraction(c), Fraction(c))


def point_is_exact(pt: Sequence[Coordinate]) -> bool:
    return all(not isinstance(c, uv.RealRoot) or c.exact is not None for c in pt)


def exact_point(pt: Sequence[Coordinate]) -> tuple[Fraction, ...]:
    return tuple(c.exact if isinstance(c, uv.RealRoot) else Fraction(c) for c in pt)


def approx_point(pt: Sequence[Coordinate]) -> tuple[float, ...]:
    return tuple(float(c) for c in pt)


def refine_point(pt: Sequence[Coordinate], width) -> tuple[Coordinate, ...]:
    return tuple(c.refine(width) if isinstance(c, uv.RealRoot) else c for c in pt)


def sign_at(p: Poly, pt: Sequence[Coordinate], max_steps: int = 200) -> int:
    """Exact sign of p at a point whose coordinates may be isolated algebraic numbers.

    Returns 0 only when the point is rational and p vanishes there; for
    algebraic points whose sign cannot be separated from zero, raises.
    """
    if point_is_exact(pt):
        v = evaluate(p, exact_point(pt))
        return (v > 0) - (v < 0)
    width = Fraction(1, 2 ** 10)
    for _ in range(max_steps):
        pt = refine_point(pt, width)
        lo, hi = interval_eval(p, [_coord_box(c) for c in pt])
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        width /= 2 ** 8
    raise ArithmeticError("could not separate the value from zero")


# ---------------------------------------------------------------------------
# forced zeros


@dataclass(frozen=True)
class ForcedZeros:
    affine: tuple[tuple[Coordinate, ...], ...]
    at_infinity: tuple[tuple[Coordinate, ...], ...]
    method: str = "resultant"
    pair: tuple[int, int] = (0, 1)
    nonround_in_A: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.affine) + len(self.at_infinity)

    def projective_points(self) -> list[tuple[Coordinate, ...]]:
        return [tuple(p) + (Fraction(1),) for p in self.affine] + [tuple(p) for p in self.at_infinity]

    def to_json_obj(self) -> dict:
        def enc(c):
            if isinstance(c, uv.RealRoot):
                if c.exact is not None:
                    return format_rational(c.exact)
                r = c.refine(Fraction(1, 10 ** 12))
                return {"interval": [format_rational(r.lo), format_rational(r.hi)],
                        "defining_poly": [format_rational(a) for a in r.poly]}
            return format_rational(c)
        return {
            "method": self.method,
            "affine": [[enc(c) for c in p] for p in self.affine],
            "at_infinity": [[enc(c) for c in p] for p in self.at_infinity],
            "nonround_in_A": list(self.nonround_in_A),
        }


def _planar_forms(basis: IdealBasis) -> list[Poly]:
    A = basis.pointset
    if A.dimension != 2:
        raise ConfigurationError("forced zeros are computed for planar configurations only")
    if basis.order != 1:
        raise ValueError("forced zeros need an order-one basis")
    if A.mode == "projective":
        return list(basis.basis)
    return [homogenize(f, basis.degree) for f in basis.basis]


def _root_coord(r: uv.RealRoot) -> Coordinate:
    return r.exact if r.exact is not None else r


def _common_affine_zeros(fs: list[Poly], i: int, j: int) -> list[tuple[Coordinate, Coordinate]]:
    """Common real zeros of all of fs, located with the pair (fs[i], fs[j])."""
    fi, fj = fs[i], fs[j]
    if fi.degree_in(1) == 0 and fj.degree_in(1) == 0:
        g = uv.poly_gcd(uv.as_univariate(fi, 0), uv.as_univariate(fj, 0))
        if uv.degree(g) > 0 and uv.real_roots(g):
            raise InfiniteIntersectionError("basis elements share a vertical line")
        return []
    res = uv.resultant(fi, fj, eliminate=1)
    if not res:
        raise InfiniteIntersectionError("vanishing resultant: the pair shares a common factor")
    out: list[tuple[Coordinate, Coordinate]] = []
    res_other = None
    for xr in uv.real_roots(res):
        if xr.exact is not None:
            g: list[Fraction] = []
            for f in fs:
                g = uv.poly_gcd(g, uv.specialize(f, 1, {0: xr.exact}))
            if not g:
                raise InfiniteIntersectionError(f"every basis element vanishes on the line x = {xr.exact}")
            for yr in uv.real_roots(g):
                out.append((xr.exact, _root_coord(yr)))
            continue
        if res_other is None:
            res_other = uv.resultant(fi, fj, eliminate=0)
        for yr in uv.real_roots(res_other):
            x, y = xr, yr
            keep = True
            width = Fraction(1, 2 ** 20)
            for _ in range(6):
                x, y = x.refine(width), y.refine(width) if yr.exact is None else y
                box = [(x.lo, x.hi), _coord_box(_root_coord(y))]
                if any(not (lo <= 0 <= hi) for lo, hi in (interval_eval(f, box) for f in fs)):
                    keep = False
                    break
                width /= 2 ** 20
            if keep:
                out.append((x, _root_coord(y)))
    return out


def _common_infinity_zeros(forms: list[Poly]) -> list[tuple[Coordinate, ...]]:
    tops = [F.substitute(2, 0) for F in forms]
    tops = [t for t in tops if t]
    if not tops:
        raise InfiniteIntersectionError("every basis element contains the line at infinity")
    out: list[tuple[Coordinate, ...]] = []
    if all(evaluate(t, (0, 1, 0)) == 0 for t in tops):
        out.append((Fraction(0), Fraction(1), Fraction(0)))
    g: list[Fraction] = []
    for t in tops:
        g = uv.poly_gcd(g, uv.specialize(t, 1, {0: Fraction(1), 2: Fraction(0)}))
    if uv.degree(g) > 0:
        for m in uv.real_roots(g):
            out.append((Fraction(1), _root_coord(m), Fraction(0)))
    return out


def _pair_order(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def forced_zeros(basis: IdealBasis) -> ForcedZeros:
    """Common real zeros of the basis outside the point set, including zeros at infinity."""
    forms = _planar_forms(basis)
    if len(forms) < 2:
        raise InfiniteIntersectionError("a single curve has infinitely many zeros")
    fs = [dehomogenize(F, 2) for F in forms]
    affine = None
    chosen = (0, 1)
    last_err: Exception | None = None
    for i, j in _pair_order(len(fs)):
        try:
            affine = _common_affine_zeros(fs, i, j)
            chosen = (i, j)
            break
        except InfiniteIntersectionError as e:
            last_err = e
    if affine is None:
        # try generic combinations before concluding the intersection is infinite
        for k in range(1, 6):
            combo = fs + [fs[0] + k * fs[1] + (k * k) * (fs[2] if len(fs) > 2 else 0)]
            try:
                affine = _common_affine_zeros(combo, len(fs), 1)
                chosen = (len(fs), 1)
                break
            except InfiniteIntersectionError as e:
                last_err = e
    if affine is None:
        raise InfiniteIntersectionError(str(last_err))
    infinity = _common_infinity_zeros(forms)

    known = {normalize_projective(p) for p in basis.pointset.homogeneous()}
    aff_out = [p for p in affine if not (point_is_exact(p) and exact_point(p) + (Fraction(1),) in known)]
    inf_out = [p for p in infinity if not (point_is_exact(p) and normalize_projective(exact_point(p)) in known)]

    nonround = tuple(
        k for k, p in enumerate(basis.pointset.homogeneous()) if not _gradients_span(forms, p)
    )
    return ForcedZeros(tuple(aff_out), tuple(inf_out), "resultant", chosen, nonround)


# ---------------------------------------------------------------------------
# fullness and copacetic sets


def _chart(point) -> tuple[int, tuple[Fraction, ...]]:
    k = max(i for i, c in enumerate(point) if c != 0)
    return k, tuple(Fraction(c) / point[k] for i, c in enumerate(point) if i != k)


def _gradient_rank(polys: Sequence[Poly], pt) -> int:
    rows = [[evaluate(g, pt) for g in f.gradient()] for f in polys]
    return linalg.rank(rows) if rows else 0


def _gradients_span(forms: Sequence[Poly], point) -> bool:
    k, apt = _chart(point)
    fs = [dehomogenize(F, k) for F in forms]
    return _gradient_rank(fs, apt) == len(apt)


def fullness(A, basis) -> bool:
    """Do the basis gradients span the tangent space at every point?"""
    A = _as_pointset(A)
    polys = list(basis.basis if isinstance(basis, IdealBasis) else basis)
    if A.mode == "projective":
        return all(_gradients_span(polys, p) for p in A.points)
    return all(_gradient_rank(polys, p) == A.nvars for p in A.points)


def _is_simple(forms: Sequence[Poly], point: Sequence[Coordinate]) -> bool:
    """Transversality of the first two forms at a (possibly algebraic) projective point."""
    if point_is_exact(point):
        return _gradients_span(forms[:2], exact_point(point))
    k = max(i for i, c in enumerate(point) if not (not isinstance(c, uv.RealRoot) and c == 0))
    fs = [dehomogenize(F, k) for F in forms[:2]]
    others = [c for i, c in enumerate(point) if i != k]
    if isinstance(point[k], uv.RealRoot):
        raise ArithmeticError("chart coordinate must be rational")
    scale = Fraction(point[k])
    g1, g2 = fs[0].gradient(), fs[1].gradient()
    jac = g1[0] * g2[1] - g1[1] * g2[0]
    pt = [c if isinstance(c, uv.RealRoot) else Fraction(c) / scale for c in others]
    try:
        return sign_at(jac, pt) != 0
    except ArithmeticError:
        return False


def copacetic(A) -> bool:
    """Eight planar points whose cubic ideal has exactly one further, simple common zero."""
    A = _as_pointset(A)
    if len(A) != 8 or A.dimension != 2:
        raise ConfigurationError("copacetic is defined for eight planar points")
    b = vanishing_basis(A, 3, 1)
    if b.dim != 2:
        raise ConfigurationError(f"the cubic ideal has dimension {b.dim}, expected 2")
    try:
        fz = forced_zeros(b)
    except InfiniteIntersectionError:
        return False
    pts = fz.projective_points()
    if len(pts) != 1:
        return False
    return _is_simple(_planar_forms(b), pts[0])


# ---------------------------------------------------------------------------
# Hilbert's original auxiliary curves


def _primitive_poly(p: Poly) -> Poly:
    """Integer coefficients with content one and positive leading coefficient."""
    c = p.content()
    p = p / c
    if p.leading()[1] < 0:
        p = -p
    return p


def _unique_solution(A: PointSet, deg: int, singular_at: Sequence[int], through: Sequence[int], what: str) -> Poly:
    monos = monomials(A.nvars, deg, homogeneous=A.mode == "projective")
    rows = []
    for k in singular_at:
        rows += condition_matrix(A.subset([k]), monos, 2)
    for k in through:
        rows += condition_matrix(A.subset([k]), monos, 1)
    ns = linalg.nullspace(rows, len(monos))
    if len(ns) != 1:
        raise ConfigurationError(f"{what}: solution space has dimension {len(ns)}, expected 1")
    return from_vector(ns[0], monos, A.nvars)


@dataclass(frozen=True)
class PhiPsi:
    phi: Poly
    psi: Poly
    value_at_ninth: Fraction


def phi_psi(A9, partition) -> PhiPsi:
    """Quadratic through five points and quartic through the same five,
    singular at three more; their product is singular at eight points."""
    A9 = _as_pointset(A9)
    five, three, one = (list(part) for part in partition)
    if len(A9) != 9 or sorted(five + three + one) != list(range(9)):
        raise ConfigurationError("need nine points split as five, three and one")
    if len(five) != 5 or len(three) != 3 or len(one) != 1:
        raise ConfigurationError("partition sizes must be 5, 3, 1")
    deg2, deg4 = (2, 4)
    phi = _primitive_poly(_unique_solution(A9, deg2, [], five, "phi"))
    psi = _primitive_poly(_unique_solution(A9, deg4, three, five, "psi"))
    val = evaluate(phi * psi, A9.points[one[0]])
    if val == 0:
        raise ConfigurationError("phi*psi vanishes at the ninth point")
    return PhiPsi(phi, psi, val)


def singular_cubic(p1, others) -> Poly:
    """The cubic singular at p1 and through six further points, monic in canonical order."""
    pts = [tuple(p1)] + [tuple(p) for p in others]
    if len(pts) != 7:
        raise ConfigurationError("need one singular point and six further points")
    A = PointSet.projective(pts) if len(pts[0]) == 3 else PointSet.affine(pts)
    rep = geometry_report(A)
    if rep.max_collinear >= 4:
        raise ConfigurationError(f"points {rep.collinear_witness} are collinear")
    if rep.all_on_conic:
        raise ConfigurationError("all seven points lie on one conic")
    f = _unique_solution(A, 3, [0], range(1, 7), "singular cubic")
    return f / f.leading()[1]
