from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertsos import linalg
from hilbertsos import univariate as uv
from hilbertsos.polycore import Poly, variables

from oracle import from_sympy, symbols, to_sympy

entries = st.integers(-4, 4).map(Fraction)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(entries, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


def _sym(rows):
    return sp.Matrix([[sp.Rational(c.numerator, c.denominator) for c in r] for r in rows])


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_and_nullspace_match_sympy(rows):
    M = _sym(rows)
    assert linalg.rank(rows) == M.rank()
    ns = linalg.nullspace(rows, len(rows[0]))
    assert len(ns) == len(rows[0]) - M.rank()
    for v in ns:
        assert all(linalg.dot(r, v) == 0 for r in rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_determinant_matches_sympy(rows):
    assert linalg.det(rows) == _sym(rows).det()


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_solve_returns_a_solution_or_none(rows, guess):
    n = len(rows[0])
    rhs = [linalg.dot(r, guess[:n]) for r in rows]
    sol = linalg.solve(rows, rhs)
    assert sol is not None
    assert [linalg.dot(r, sol) for r in rows] == rhs


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_echelon_span_reduces_members_to_zero():
    span = linalg.EchelonSpan(3)
    assert span.add([1, 2, 3])
    assert span.add([0, 1, 1])
    assert not span.add([1, 3, 4])
    assert not any(span.reduce([2, 5, 7]))
    assert any(span.reduce([0, 0, 1]))
    assert len(span) == 2


def test_real_roots_of_known_polynomial():
    # (x - 1/2)(x + 3)(x^2 - 2)
    p = uv.mul(uv.mul([Fraction(-1, 2), 1], [3, 1]), [-2, 0, 1])
    roots = uv.real_roots(p)
    assert len(roots) == 4
    assert roots[0].exact == -3
    assert roots[2].exact == Fraction(1, 2)
    r = roots[1].refine(Fraction(1, 10**12))
    assert r.lo < -2**0.5 < r.hi


def test_positive_roots_skip_zero():
    assert [r.exact for r in uv.positive_roots([0, -1, 0, 1])] == [1]


def test_multiplicity():
    p = uv.mul(uv.mul([-1, 1], [-1, 1]), [1, 0, 1])
    (root,) = uv.real_roots(p)
    assert root.exact == 1 and uv.multiplicity(p, root) == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        uv.real_roots([0, 0])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_root_count_matches_sympy(coeffs):
    x = sp.Symbol("x")
    P = sp.Poly(list(reversed(coeffs)), x)
    expected = sorted(set(P.real_roots()), key=lambda r: float(r))
    roots = uv.real_roots([Fraction(c) for c in coeffs])
    assert len(roots) == len(expected)
    for r, e in zip(roots, expected):
        lo, hi = (r.exact, r.exact) if r.exact is not None else (r.lo, r.hi)
        assert float(lo) - 1e-12 <= float(e) <= float(hi) + 1e-12


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_resultant_matches_sympy(cf, cg):
    x, y = variables(2)
    monos = [Poly.const(1, 2), x, y, x * x, x * y, y * y]
    f = sum((c * m for c, m in zip(cf, monos)), Poly(2)) + x**3
    g = sum((c * m for c, m in zip(cg, monos)), Poly(2)) + y**2 * x
    s = symbols(2)
    expected = sp.Poly(sp.resultant(to_sympy(f, s), to_sympy(g, s), s[1]), s[0])
    got = uv.resultant(f, g, 1)
    want = [Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())] if not expected.is_zero else []
    assert uv.trim(got) == uv.trim(want)


def test_from_sympy_helper_round_trip():
    s = symbols(2)
    p = from_sympy(s[0] ** 2 - sp.Rational(1, 3) * s[1], s)
    x, y = variables(2)
    assert p == x * x - Fraction(1, 3) * y
