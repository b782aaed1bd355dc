"""Parameter-space geometry of the Robinson pencil and a Newton polytope obstruction."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import univariate as uv
from .catalog import multiplier_lambdas
from .polycore import Poly, format_rational


# ---------------------------------------------------------------------------
# the curve C and region K


def curve_params(t) -> tuple[Fraction, Fraction]:
    """(alpha(t), beta(t)); the boundary curve of K is traced as t runs over (0, inf)."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("curve parameter must be positive")
    return (2 * t**2 + t**4) / 3, (1 + 2 * t**2) / (3 * t**4)


def gamma(r: float) -> float:
    """Floating value of the boundary height above r (for plotting and grids only)."""
    return (2 + 9 * r + 2 * (1 + 3 * r) ** 1.5) / (27 * r * r)


def in_region_K(r, s) -> bool:
    """Exact test of s >= gamma(r) with r > 0, without radicals."""
    r, s = Fraction(r), Fraction(s)
    if r <= 0:
        return False
    lhs = 27 * r * r * s - 9 * r - 2
    return lhs >= 0 and lhs * lhs >= 4 * (1 + 3 * r) ** 3


def binary_family(r, s) -> Poly:
    """r x^6 - x^4 y^2 - x^2 y^4 + s y^6."""
    r, s = Fraction(r), Fraction(s)
    return Poly(2, {(6, 0): r, (4, 2): -1, (2, 4): -1, (0, 6): s})


# ---------------------------------------------------------------------------
# sigma


@dataclass(frozen=True)
class SigmaResult:
    c1: Fraction
    c3: Fraction
    v: uv.RealRoot
    sextic: tuple[Fraction, ...]
    lo: Fraction
    hi: Fraction

    @property
    def two_sigma(self) -> tuple[Fraction, Fraction]:
        return 2 * self.lo, 2 * self.hi

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def to_json_obj(self, digits: int = 10) -> dict:
        r = self.v
        return {
            "kind": "exact",
            "c1": format_rational(self.c1),
            "c3": format_rational(self.c3),
            "sextic": [format_rational(a) for a in self.sextic],
            "v_interval": [format_rational(r.lo), format_rational(r.hi)],
            "sigma_interval": [format_rational(self.lo), format_rational(self.hi)],
            "sigma_decimal": f"{float(self):.{digits}f}",
        }


def psi_enclosure(c1, c3, lo, hi) -> tuple[Fraction, Fraction]:
    """Bounds for (1+c1)u^-3 - u^-1 - u + (1+c3)u^3 over 0 < lo <= u <= hi."""
    a, b = 1 + Fraction(c1), 1 + Fraction(c3)
    lo, hi = Fraction(lo), Fraction(hi)
    if lo <= 0:
        raise ValueError("enclosure needs a positive interval")
    return (a / hi**3 - 1 / lo - hi + b * lo**3,
            a / lo**3 - 1 / hi - lo + b * hi**3)


def psi_value(c1, c3, u) -> Fraction:
    u = Fraction(u)
    return (1 + Fraction(c1)) / u**3 - 1 / u - u + (1 + Fraction(c3)) * u**3


def _positive_box(root: uv.RealRoot) -> uv.RealRoot:
    w = root.width
    while root.lo <= 0:
        w /= 2
        root = root.refine(w)
    return root


def _enclose(c1, c3, root: uv.RealRoot) -> tuple[Fraction, Fraction]:
    if root.exact is not None:
        v = psi_value(c1, c3, root.exact)
        return v, v
    return psi_enclosure(c1, c3, root.lo, root.hi)


def sigma(c1, c3, width=Fraction(1, 10**9)) -> SigmaResult:
    """Half the minimum of Psi over u > 0, enclosed to the requested width."""
    c1, c3, width = Fraction(c1), Fraction(c3), Fraction(width)
    if 1 + c1 <= 0 or 1 + c3 <= 0:
        raise ValueError("Psi is unbounded below unless 1 + c1 > 0 and 1 + c3 > 0")
    h = [-3 * (1 + c1), 0, 1, 0, -1, 0, 3 * (1 + c3)]
    roots = [_positive_box(r) for r in uv.positive_roots(h)]
    if not roots:
        raise ValueError("no positive critical point")
    boxes = [(_enclose(c1, c3, r), r) for r in roots]
    # shrink until the lowest enclosure is tight and every overlapping rival is too
    w = min(r.width for r in roots)
    while True:
        best = min(boxes, key=lambda b: b[0][0])
        rivals = [b for b in boxes if b is not best and b[0][0] < best[0][1]]
        if (best[0][1] - best[0][0]) / 2 <= width and all(b[0][1] - b[0][0] <= width for b in rivals):
            break
        w /= 4
        refined = [r.refine(w) for _, r in boxes]
        boxes = [(_enclose(c1, c3, r), r) for r in refined]
    (lo, hi), root = best
    return SigmaResult(c1, c3, root, tuple(Fraction(a) for a in h), lo / 2, hi / 2)


# ---------------------------------------------------------------------------
# classification of Phi[c1, c2, c3, c4]


@dataclass(frozen=True)
class PhiClassification:
    label: str
    on_boundary: bool = False
    reason: str = ""


def _nonnegative_on_positive_axis(h: Sequence[Fraction]) -> tuple[bool, bool]:
    """(h >= 0 on (0, inf), h has a positive root) for a univariate polynomial h."""
    h = uv.trim(h)
    if not h:
        return True, True
    roots = [_positive_box(r) for r in uv.positive_roots(h)]
    if not roots:
        return uv.evaluate(h, 1) > 0, False
    left = [r.exact if r.exact is not None else r.lo for r in roots]
    right = [r.exact if r.exact is not None else r.hi for r in roots]
    # one test point in every gap between consecutive roots
    tests = [left[0] / 2] + [(a + b) / 2 for a, b in zip(right, left[1:])] + [right[-1] + 1]
    return all(uv.evaluate(h, t) > 0 for t in tests), True


def classify_phi(c1, c2, c3, c4) -> PhiClassification:
    """sos / psd_not_sos / not_psd for c1 F1^2 + 2 c2 F1 F2 + c3 F2^2 + c4 R."""
    c1, c2, c3, c4 = (Fraction(c) for c in (c1, c2, c3, c4))
    if c4 == 0:
        if c1 >= 0 and c3 >= 0 and c1 * c3 >= c2 * c2:
            return PhiClassification("sos", c1 * c3 == c2 * c2, "psd quadratic form in (F1, F2)")
        return PhiClassification("not_psd", False, "quadratic form in (F1, F2) is not psd")
    if c4 < 0:
        return PhiClassification("not_psd", False, "negative at (0,0,1)")
    a, b, m = 1 + c1 / c4, 1 + c3 / c4, abs(c2 / c4)
    if a < 0 or b <= 0:
        return PhiClassification("not_psd", False, "binary restriction to z = 0 is not psd")
    # Gamma(1, u) with the sign of u chosen to make the odd term negative
    h = [a, 0, -1, -2 * m, -1, 0, b]
    ok, touches = _nonnegative_on_positive_axis(h)
    if a == 0:
        ok, touches = False, True
    if ok:
        return PhiClassification("psd_not_sos", touches, "restriction to z = 0 is psd; c4 > 0 rules out sos")
    return PhiClassification("not_psd", False, "restriction to z = 0 takes a negative value")


def classify_phi_via_sigma(c1, c2, c3, c4) -> str:
    """Second route for c4 > 0: region membership plus the sigma bound."""
    c1, c2, c3, c4 = (Fraction(c) for c in (c1, c2, c3, c4))
    if c4 <= 0:
        return classify_phi(c1, c2, c3, c4).label
    c1, c2, c3 = c1 / c4, c2 / c4, c3 / c4
    if not in_region_K(1 + c1, 1 + c3):
        return "not_psd"
    sg = sigma(c1, c3)
    if abs(c2) <= sg.lo:
        return "psd_not_sos"
    if abs(c2) > sg.hi:
        return "not_psd"
    return "undecided"


# ---------------------------------------------------------------------------
# Jacobian locus


def jacobian_locus(F1: Poly, F2: Poly, G: Poly) -> Poly:
    """Determinant of the gradient matrix of three ternary forms."""
    fs = (F1, F2, G)
    if any(f.nvars != 3 for f in fs):
        raise ValueError("jacobian_locus expects ternary polynomials")
    if not all(f.is_homogeneous() for f in fs):
        raise ValueError("jacobian_locus expects forms")
    m = [f.gradient() for f in fs]
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


# ---------------------------------------------------------------------------
# diagonal multipliers for R


@dataclass(frozen=True)
class MultiplierResult:
    r: Fraction
    s: Fraction
    t: Fraction
    lambdas: tuple[Fraction, ...]
    discriminant: Fraction
    heron: Fraction
    feasible: bool

    def to_json_obj(self) -> dict:
        return {
            "kind": "exact",
            "r": format_rational(self.r), "s": format_rational(self.s), "t": format_rational(self.t),
            "lambdas": [format_rational(v) for v in self.lambdas],
            "discriminant": format_rational(self.discriminant),
            "heron_product": format_rational(self.heron),
            "feasible": self.feasible,
        }


def heron_product(r, s, t) -> Fraction:
    r, s, t = Fraction(r), Fraction(s), Fraction(t)
    return (r + s - t) * (r + t - s) * (s + t - r) * (r + s + t) / 4


def triangle_inequality(r, s, t) -> bool:
    r, s, t = Fraction(r), Fraction(s), Fraction(t)
    return r <= s + t and s <= r + t and t <= r + s


def robinson_multiplier(r, s, t) -> MultiplierResult:
    """Coefficients making (r^2x^2+s^2y^2+t^2z^2) R a psd quadratic form in six cubic products."""
    r, s, t = Fraction(r), Fraction(s), Fraction(t)
    if min(r, s, t) < 0:
        raise ValueError("r, s, t must be nonnegative")
    lam = multiplier_lambdas(r, s, t)
    disc = lam[3] * lam[5] - lam[4] ** 2
    her = heron_product(r, s, t)
    if disc != her:
        raise ArithmeticError("discriminant does not match the Heron product")
    return MultiplierResult(r, s, t, tuple(lam), disc, her, disc >= 0)


# ---------------------------------------------------------------------------
# Newton polytope obstruction


@dataclass(frozen=True)
class NewtonResult:
    conclusive: bool
    target: tuple[int, ...] | None
    coefficient: Fraction | None
    candidate: tuple[int, ...] | None
    half_points: tuple[tuple[int, ...], ...]

    def to_json_obj(self) -> dict:
        out = {"kind": "exact", "conclusive": self.conclusive,
               "half_points": [list(a) for a in self.half_points]}
        if self.conclusive:
            out.update(target=list(self.target), coefficient=format_rational(self.coefficient),
                       candidate=list(self.candidate))
        return out


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Monotone chain hull, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def in_hull(hull: Sequence[tuple[int, int]], q: tuple[int, int]) -> bool:
    if len(hull) == 1:
        return tuple(q) == tuple(hull[0])
    if len(hull) == 2:
        a, b = hull
        if _cross(a, b, q) != 0:
            return False
        return min(a[0], b[0]) <= q[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= q[1] <= max(a[1], b[1])
    n = len(hull)
    return all(_cross(hull[i], hull[(i + 1) % n], q) >= 0 for i in range(n))


def half_newton_points(p: Poly) -> list[tuple[int, int, int]]:
    """Lattice points alpha with 2 alpha in the Newton polytope of a ternary form."""
    if p.nvars != 3 or not p.is_homogeneous() or p.is_zero():
        raise ValueError("expects a nonzero ternary form")
    deg = p.degree()
    if deg % 2:
        raise ValueError("expects even degree")
    hull = convex_hull([(e[0], e[1]) for e in p.terms])
    d = deg // 2
    return [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)
            if in_hull(hull, (2 * a, 2 * b))]


def newton_not_sos(p: Poly) -> NewtonResult:
    """Not-sos witness: a negative square-exponent coefficient reachable only as alpha + alpha."""
    C = half_newton_points(p)
    Cset = set(C)
    for e, c in p.items():
        if c >= 0 or any(k % 2 for k in e):
            continue
        alpha = tuple(k // 2 for k in e)
        pairs = [b for b in C if tuple(k - j for k, j in zip(e, b)) in Cset]
        if pairs == [alpha]:
            return NewtonResult(True, e, c, alpha, tuple(C))
    return NewtonResult(False, None, None, None, tuple(C))
