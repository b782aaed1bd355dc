"""Hilbert's method: perturb a sum of squares by a singular non-product term.

Exact parts (ideal bases, forced zeros, dual witnesses, the final
polynomial) use rationals.  The perturbation constant and the positivity
audit come from floating point sphere sampling and are advisory only.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linprog, minimize
from scipy.stats import norm, qmc

from . import linalg
from .pointideal import (
    DualWitness,
    ForcedZeros,
    IdealBasis,
    NotSingularError,
    PointSet,
    _as_pointset,
    dual_witness,
    exact_point,
    forced_zeros,
    fullness,
    gap_element,
    point_is_exact,
    product_span,
    sign_at,
    vanishes_to_order,
    vanishing_basis,
)
from .polycore import (
    Poly,
    QuadForm,
    coefficient_vector,
    evaluate,
    format_rational,
    from_vector,
    homogenize,
    monomials,
    to_text,
)

DEFAULT_SAMPLES = 200_000
DEFAULT_REFINE = 32
DEFAULT_SEED = 0


class NotFullError(ValueError):
    pass


class NoGapError(ValueError):
    pass


class ForcedZeroSignError(ValueError):
    """The perturbation term cannot be made positive at every forced zero."""


class NotPsdInputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# numeric evaluation


class NumericPoly:
    """Vectorised float evaluation of a Poly."""

    def __init__(self, p: Poly):
        items = p.items()
        self.nvars = p.nvars
        self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), p.nvars)
        self.coefs = np.array([float(c) for _, c in items], dtype=float)

    def _monos(self, X: np.ndarray) -> np.ndarray:
        out = np.ones((X.shape[0], len(self.coefs)))
        for i in range(self.nvars):
            col = self.exps[:, i]
            if col.any():
                out *= X[:, i:i + 1] ** col[None, :]
        return out

    def __call__(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return self._monos(X) @ self.coefs

    def magnitude(self, X: np.ndarray) -> np.ndarray:
        """Sum of absolute term values, a scale for cancellation checks."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return np.abs(self._monos(X)) @ np.abs(self.coefs)


def sphere_points(n: int, dim: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Quasi-uniform points on the unit sphere in R^dim.

    A scrambled Sobol sequence is pushed through the normal quantile
    function and normalised.  The first k points do not depend on n, so
    larger samples extend smaller ones.
    """
    sampler = qmc.Sobol(d=dim, scramble=True, seed=seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        U = sampler.random(n)
    U = np.clip(U, 1e-12, 1 - 1e-12)
    Z = norm.ppf(U)
    return Z / np.linalg.norm(Z, axis=1, keepdims=True)


def box_points(n: int, lo: Sequence[float], hi: Sequence[float], seed: int = DEFAULT_SEED) -> np.ndarray:
    sampler = qmc.Sobol(d=len(lo), scramble=True, seed=seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        U = sampler.random(n)
    return qmc.scale(U, lo, hi)


def _lift(X: np.ndarray) -> np.ndarray:
    Y = np.hstack([X, np.ones((X.shape[0], 1))])
    return Y / np.linalg.norm(Y, axis=1, keepdims=True)


def _chunks(n: int, size: int = 50_000):
    for start in range(0, n, size):
        yield slice(start, min(n, start + size))


# ---------------------------------------------------------------------------
# audits


@dataclass(frozen=True)
class AuditReport:
    sample_count: int
    minimum: float
    location: tuple[float, ...]
    tol: float
    seed: int
    negative_witness: tuple[Fraction, ...] | None = None
    witness_value: Fraction | None = None
    advisory: bool = True

    @property
    def negative(self) -> bool:
        return self.negative_witness is not None

    @property
    def verdict(self) -> str:
        if self.negative_witness is not None:
            return "negative witness"
        if self.minimum < -self.tol:
            return "numerically negative, no exact witness"
        return "no negativity found above -tol"

    def to_json_obj(self) -> dict:
        out = {
            "kind": "audit",
            "advisory": self.advisory,
            "sample_count": self.sample_count,
            "minimum": self.minimum,
            "location": list(self.location),
            "tol": self.tol,
            "seed": self.seed,
            "verdict": self.verdict,
        }
        if self.negative_witness is not None:
            out["negative_witness"] = {
                "kind": "exact",
                "point": [format_rational(c) for c in self.negative_witness],
                "value": format_rational(self.witness_value),
            }
        return out


def _rationalize(v: Sequence[float], den: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(float(a)).limit_denominator(den) for a in v)


def psd_audit(F: Poly, samples: int = DEFAULT_SAMPLES, tol: float = 1e-9,
              seed: int = DEFAULT_SEED, refine: int = DEFAULT_REFINE) -> AuditReport:
    """Minimum of a form over the unit sphere by sampling plus local refinement."""
    if not F.is_homogeneous():
        raise ValueError("psd_audit expects a form")
    num = NumericPoly(F)
    n = F.nvars
    X = sphere_points(samples, n, seed)
    vals = np.concatenate([num(X[s]) for s in _chunks(samples)])
    order = np.argsort(vals)[:refine]
    best_val = float(vals[order[0]])
    best_x = X[order[0]]

    def obj(u):
        r = np.linalg.norm(u)
        if r < 1e-12:
            return 1e300
        return float(num((u / r)[None, :])[0])

    for k in order:
        res = minimize(obj, X[k], method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-16, "maxiter": 4000})
        if res.fun < best_val:
            best_val = float(res.fun)
            best_x = res.x / np.linalg.norm(res.x)

    witness = None
    wval = None
    if best_val < -tol:
        for den in (10 ** 3, 10 ** 6, 10 ** 9, 10 ** 12):
            pt = _rationalize(best_x, den)
            if not any(pt):
                continue
            v = evaluate(F, pt)
            if v < 0:
                witness, wval = pt, v
                break
    return AuditReport(samples, best_val, tuple(float(a) for a in best_x), tol, seed, witness, wval)


# ---------------------------------------------------------------------------
# perturbation constant


@dataclass(frozen=True)
class PerturbationEstimate:
    c_max_estimate: float
    raw_estimate: float
    argmin: tuple[float, ...]
    sample_count: int
    seed: int

    def to_json_obj(self) -> dict:
        return {
            "kind": "audit",
            "c_max_estimate": self.c_max_estimate,
            "raw_estimate": self.raw_estimate,
            "argmin": list(self.argmin),
            "sample_count": self.sample_count,
            "seed": self.seed,
        }


def as_forms(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Common homogenization of f and g to the degree of f."""
    if f.nvars != g.nvars:
        raise ValueError("f and g must have the same number of variables")
    deg = f.degree()
    if deg % 2:
        raise ValueError("f must have even degree")
    if g.degree() > deg:
        raise ValueError("deg g exceeds deg f")
    if f.is_homogeneous() and g.is_homogeneous() and (g.is_zero() or g.degree() == deg):
        return f, g
    return homogenize(f, deg), homogenize(g, deg)


def max_perturbation(f: Poly, g: Poly, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                     refine: int = DEFAULT_REFINE, box: tuple[Sequence[float], Sequence[float]] | None = None,
                     eps: float = 1e-12) -> PerturbationEstimate:
    """Estimate sup{c : f + c g >= 0} as the infimum of f / (-g) where g < 0.

    With ``box`` the search is restricted to affine points in that box
    (lifted to the sphere); otherwise the whole sphere of the homogenized
    forms is sampled.
    """
    F, G = as_forms(f, g)
    nF, nG = NumericPoly(F), NumericPoly(G)
    if box is None:
        X = sphere_points(samples, F.nvars, seed)
        lift = lambda Y: Y
    else:
        if F.nvars != len(box[0]) + 1:
            raise ValueError("box dimension does not match the affine variables")
        X = box_points(samples, box[0], box[1], seed)
        lift = _lift

    def ratios(Y: np.ndarray) -> np.ndarray:
        P = lift(Y)
        fv = nF(P)
        gv = nG(P)
        scale = nG.magnitude(P)
        if np.any(fv < -1e-9 * np.maximum(nF.magnitude(P), 1e-300)):
            raise NotPsdInputError("f takes negative values")
        ok = (-gv > eps) & (-gv > 1e-9 * scale)
        out = np.full(len(P), np.inf)
        out[ok] = fv[ok] / (-gv[ok])
        return out

    r = np.concatenate([ratios(X[s]) for s in _chunks(samples)])
    if not np.isfinite(r).any():
        return PerturbationEstimate(math.inf, math.inf, (), samples, seed)
    order = np.argsort(r)[:refine]
    raw = float(r[order[0]])
    best, best_x = raw, X[order[0]]

    def obj(u):
        try:
            v = ratios(np.asarray(u)[None, :])[0]
        except NotPsdInputError:
            return math.inf
        return float(v) if np.isfinite(v) else 1e300

    for k in order:
        if not np.isfinite(r[k]):
            continue
        res = minimize(obj, X[k], method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
        if res.fun < best:
            best, best_x = float(res.fun), np.asarray(res.x)
    point = lift(best_x[None, :])[0]
    if box is None:
        point = point / np.linalg.norm(point)
    return PerturbationEstimate(best, raw, tuple(float(a) for a in point), samples, seed)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class InSpan:
    """p = Q(f_1, ..., f_r) for the symmetric matrix Q."""

    quadform: QuadForm
    basis: tuple[Poly, ...]
    unique: bool

    def to_json_obj(self) -> dict:
        return {
            "kind": "exact",
            "result": "in_span",
            "unique": self.unique,
            "basis": [to_text(b) for b in self.basis],
            "Q": [[format_rational(c) for c in row] for row in self.quadform.matrix],
        }


def _witness_json(w: DualWitness) -> dict:
    out = w.to_json_obj()
    out["kind"] = "exact"
    out["result"] = "not_sos"
    return out


def not_sos_certificate(p: Poly, A, d: int) -> DualWitness | InSpan:
    """Exact separation of p from the product span of I_{1,d}(A), or p's coordinates in it."""
    A = _as_pointset(A)
    if p.nvars != A.nvars:
        raise ValueError("polynomial and points have different numbers of variables")
    if not vanishes_to_order(p, A, 2):
        raise NotSingularError("p is not singular at every point of the set")
    b1 = vanishing_basis(A, d, 1)
    ps = product_span(b1)
    monos = monomials(A.nvars, 2 * d, homogeneous=A.mode == "projective")
    mono_set = set(monos)
    if any(e not in mono_set for e in p.terms):
        raise ValueError(f"p has monomials outside degree {2 * d}")
    w = dual_witness(ps.products, p, monos)
    if w is not None:
        return w
    cols = [coefficient_vector(q, monos) for q in ps.products]
    rows = [[col[i] for col in cols] for i in range(len(monos))]
    sol = linalg.solve(rows, coefficient_vector(p, monos))
    r = len(b1.basis)
    Q = [[Fraction(0)] * r for _ in range(r)]
    for (i, j), a in zip(ps.pairs, sol):
        if i == j:
            Q[i][i] = a
        else:
            Q[i][j] = Q[j][i] = a / 2
    return InSpan(QuadForm(tuple(tuple(row) for row in Q)), b1.basis, ps.independent)


# ---------------------------------------------------------------------------
# the pipeline


@dataclass(frozen=True)
class ConstructionResult:
    basis: IdealBasis
    g: Poly
    forced: ForcedZeros
    sign_fixed_g: Poly
    c_estimate: Fraction | None
    c: Fraction
    f: Poly
    p_c: Poly
    not_sos_witness: DualWitness
    audit: AuditReport | None
    perturbation: PerturbationEstimate | None

    def to_json_obj(self) -> dict:
        names = None
        return {
            "basis": [to_text(b, names) for b in self.basis.basis],
            "forced_zeros": {"kind": "exact", **self.forced.to_json_obj()},
            "g": to_text(self.g, names),
            "sign_fixed_g": to_text(self.sign_fixed_g, names),
            "c_estimate": None if self.c_estimate is None else format_rational(self.c_estimate),
            "c": format_rational(self.c),
            "p_c": {"kind": "exact", "poly": to_text(self.p_c, names)},
            "not_sos_witness": _witness_json(self.not_sos_witness),
            "perturbation": None if self.perturbation is None else self.perturbation.to_json_obj(),
            "audit": None if self.audit is None else self.audit.to_json_obj(),
        }


def _forced_projective(A: PointSet, basis: IdealBasis, forced_points) -> ForcedZeros:
    if forced_points is None:
        return forced_zeros(basis)
    aff, inf = [], []
    for pt in forced_points:
        pt = tuple(Fraction(c) for c in pt)
        if len(pt) != A.nvars:
            raise ValueError("forced point has the wrong dimension")
        if any(evaluate(f, pt) != 0 for f in basis.basis):
            raise ValueError(f"{pt} is not a common zero of the basis")
        (inf if A.mode == "projective" and pt[-1] == 0 else aff).append(pt)
    return ForcedZeros(tuple(aff), tuple(inf), "verified-input")


def _forced_as_form_points(A: PointSet, fz: ForcedZeros):
    """Forced zeros as points at which the homogenized form is evaluated."""
    if A.mode == "projective" and fz.method == "verified-input":
        return list(fz.affine) + list(fz.at_infinity)
    return fz.projective_points()


def _sign_fix(gaps: list[Poly], values: list[list[Fraction]] | None, points, forms) -> Poly:
    """A combination of gap elements that is positive at every forced zero."""
    k = len(points)
    m = len(gaps)
    if values is not None:
        rows = [[values[i][j] for i in range(m)] for j in range(k)]
        sol = linalg.solve(rows, [Fraction(1)] * k)
        if sol is not None:
            return sum((c * g for c, g in zip(sol, gaps)), Poly(gaps[0].nvars))
    # floating LP: maximise the margin t subject to sum lam_i g_i(w_j) >= t, |lam| <= 1
    approx = np.array([[float(sign_at_value(G, p)) for G in forms] for p in points])
    c = np.zeros(m + 1)
    c[-1] = -1.0
    A_ub = np.hstack([-approx, np.ones((k, 1))])
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(k), bounds=[(-1, 1)] * m + [(None, 1)])
    if res.status == 0 and res.x[-1] > 1e-9:
        lam = _rationalize(res.x[:m], 10 ** 6)
        h = sum((c * g for c, g in zip(lam, gaps)), Poly(gaps[0].nvars))
        hf = sum((c * G for c, G in zip(lam, forms)), Poly(forms[0].nvars))
        if all(sign_at(hf, p) > 0 for p in points):
            return h
    raise ForcedZeroSignError("no combination of gap elements is positive at all forced zeros")


def sign_at_value(G: Poly, pt) -> float:
    return float(evaluate(G, [float(c) for c in pt])) if not point_is_exact(pt) else float(evaluate(G, exact_point(pt)))


def construct_not_sos(A, d: int, c: Fraction | str | None = None, g: Poly | None = None,
                      forced_points=None, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                      audit: bool = True, safety: Fraction = Fraction(9, 10)) -> ConstructionResult:
    """Run the full construction: basis, forced zeros, gap element, constant, witness."""
    A = _as_pointset(A)
    b1 = vanishing_basis(A, d, 1)
    if not fullness(A, b1):
        raise NotFullError("the degree-d ideal is not full at some point")
    fz = _forced_projective(A, b1, forced_points)

    gap = gap_element(A, d)
    if g is None:
        if gap is None:
            raise NoGapError("I_{2,2d} equals the product span")
        g0 = gap.g
    else:
        if not vanishes_to_order(g, A, 2):
            raise NotSingularError("the supplied g is not singular on the set")
        g0 = g
    ps = product_span(b1)
    monos = monomials(A.nvars, 2 * d, homogeneous=A.mode == "projective")
    if dual_witness(ps.products, g0, monos) is None:
        raise NoGapError("the perturbation term lies in the product span")

    def form(q: Poly) -> Poly:
        return q if A.mode == "projective" else homogenize(q, 2 * d)

    points = _forced_as_form_points(A, fz)
    signs = [sign_at(form(g0), p) for p in points]
    if any(s == 0 for s in signs):
        raise ForcedZeroSignError("g vanishes at a forced zero")
    if all(s > 0 for s in signs):
        gfix = g0
    elif all(s < 0 for s in signs):
        gfix = -g0
    else:
        # products vanish at forced zeros, so only other gap directions can help
        gaps = [g0]
        span = linalg.EchelonSpan(len(monos))
        for q in ps.products:
            span.add(coefficient_vector(q, monos))
        span.add(coefficient_vector(g0, monos))
        for q in gap.order_two.basis if gap else vanishing_basis(A, 2 * d, 2).basis:
            rem = span.reduce(coefficient_vector(q, monos))
            if any(rem):
                span.add(rem)
                gaps.append(from_vector(rem, monos, A.nvars))
        forms = [form(q) for q in gaps]
        if all(point_is_exact(p) for p in points):
            vals = [[evaluate(G, exact_point(p)) for p in points] for G in forms]
        else:
            vals = None
        gfix = _sign_fix(gaps, vals, points, forms)

    f = sum((q * q for q in b1.basis), Poly(A.nvars))
    est = None
    c_est = None
    if c is None or c == "auto":
        est = max_perturbation(f, gfix, samples=samples, seed=seed)
        if math.isinf(est.c_max_estimate):
            c_val = Fraction(1)
        else:
            c_est = Fraction(est.c_max_estimate).limit_denominator(10 ** 6)
            c_val = (safety * c_est).limit_denominator(10 ** 6)
    else:
        c_val = Fraction(c)
    p_c = f + c_val * gfix
    witness = dual_witness(ps.products, p_c, monos)
    if witness is None:
        raise NoGapError("p_c unexpectedly lies in the product span")
    rep = psd_audit(form(p_c), samples=samples, seed=seed) if audit else None
    return ConstructionResult(b1, g0, fz, gfix, c_est, c_val, f, p_c, witness, rep, est)
