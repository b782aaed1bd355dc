"""Independent reference computations built on sympy, used only by the tests."""
from __future__ import annotations

from fractions import Fraction

import sympy as sp

from hilbertsos.polycore import Poly, default_names

# Values computed once with sympy/mpmath outside the package and frozen here.
# Positive real root of 729x^6 - 22518x^4 + 182744x^2 - 111392, i.e. the true
# minimum of 2u^-3 - u^-1 - u + u^3 over u > 0.
TWO_SIGMA_1_0 = 0.81392272739375
# Positive root of the sextic with middle coefficient 182774 as printed in the source.
PRINTED_SEXTIC_ROOT = 0.81384339460747
# 4 sqrt(sqrt(2) - 1)
U_CONFIG_BOUND = 2.5743770116223305


def symbols(n: int):
    return sp.symbols(" ".join(default_names(n)), seq=True)


def to_sympy(p: Poly, syms=None):
    syms = syms or symbols(p.nvars)
    expr = sp.Integer(0)
    for e, c in p.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s**k
        expr += term
    return sp.expand(expr)


def from_sympy(expr, syms) -> Poly:
    P = sp.Poly(sp.expand(expr), *syms)
    return Poly(len(syms), {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in zip(P.monoms(), P.coeffs())})


def vanishing_dimension(points, degree: int, order: int, projective: bool = False) -> int:
    """Dimension of polynomials of the given degree singular to the given order at the points."""
    n = len(points[0])
    syms = symbols(n)
    if projective:
        monos = sorted(sp.itermonomials(syms, degree, degree), key=sp.default_sort_key)
        monos = [m for m in monos if sp.Poly(m, *syms).total_degree() == degree]
    else:
        monos = sorted(sp.itermonomials(syms, degree), key=sp.default_sort_key)
    rows = []
    for pt in points:
        sub = dict(zip(syms, [sp.Rational(str(c)) for c in pt]))
        derivs = [sp.Integer(1)]
        if order >= 2:
            derivs = [None] + list(syms)
        for dv in derivs:
            row = []
            for m in monos:
                val = m if dv is None or dv == 1 else sp.diff(m, dv)
                row.append(sp.sympify(val).subs(sub))
            rows.append(row)
    M = sp.Matrix(rows)
    return len(monos) - M.rank()
