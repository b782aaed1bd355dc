from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertsos import catalog
from hilbertsos.interp import gondola_g
from hilbertsos.polycore import (
    ArityError,
    NotHomogeneousError,
    Poly,
    QuadForm,
    compose,
    dehomogenize,
    evaluate,
    from_json_obj,
    from_text,
    homogenize,
    is_round,
    is_round_projective,
    loads,
    dumps,
    monomials,
    poly_sqrt,
    quadform_definiteness,
    taylor_quadratic,
    to_json_obj,
    to_text,
    variables,
)

from oracle import from_sympy, symbols, to_sympy

x, y, z = variables(3)
X, Y = variables(2)

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, nvars=3, max_degree=3, max_terms=5):
    monos = monomials(nvars, max_degree)
    picked = draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True))
    return Poly(nvars, {e: draw(small_rationals) for e in picked})


@st.composite
def forms(draw, nvars=3, degree=3, max_terms=5):
    monos = monomials(nvars, degree, homogeneous=True)
    picked = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=max_terms, unique=True))
    return Poly(nvars, {e: draw(small_rationals.filter(bool)) for e in picked})


points3 = st.tuples(small_rationals, small_rationals, small_rationals)


def test_motzkin_vanishes_at_all_ones():
    assert evaluate(catalog.form("M"), (1, 1, 1)) == 0


def test_robinson_vanishes_at_one_one_zero():
    assert evaluate(catalog.form("R"), (1, 1, 0)) == 0


def test_gondola_g3_at_two_two():
    assert evaluate(gondola_g(3), (2, 2)) == 8


def test_homogenize_cubics():
    assert homogenize(X**3 - X, 3) == x**3 - x * z**2
    assert homogenize(Y**3 - Y, 3) == y**3 - y * z**2
    assert homogenize(Poly.const(1, 2), 2) == z**2


def test_homogenize_rejects_low_target():
    with pytest.raises(ValueError):
        homogenize(X**3, 2)


def test_dehomogenize_examples():
    M = catalog.form("M")
    assert dehomogenize(M) == X**4 * Y**2 + X**2 * Y**4 + 1 - 3 * X**2 * Y**2
    assert dehomogenize(x**3 - x * z**2) == X**3 - X
    assert dehomogenize(z**6) == Poly.const(1, 2)


def test_dehomogenize_rejects_non_form():
    with pytest.raises(NotHomogeneousError):
        dehomogenize(x**2 + y)


def test_compose_T_from_cubics():
    F = catalog.seven_point_cubics(x, y, z)
    u = variables(3)
    T = compose(catalog.quad_Q(*u), list(F))
    assert T == catalog.form("T_sextic")
    assert T.permute((1, 0, 2)) == T and T.permute((0, 2, 1)) == T


def test_compose_quartic_gives_square():
    F = catalog.seven_point_cubics(x, y, z)
    P = compose(catalog.quartic_P(*variables(3)), list(F))
    assert P == ((x**2 - y**2) * (x**2 - z**2) * (y**2 - z**2)) ** 2


def test_compose_quaternary_robinson_to_choi_lam_q():
    a, b, c, w = variables(4)
    Rq = catalog.form("R~")
    assert compose(Rq, [a - w, b - w, c - w, a + b + c - w]) == 2 * catalog.form("Q")


def test_compose_arity_errors():
    with pytest.raises(ArityError):
        compose(x + y + z, [X, Y])
    with pytest.raises(ArityError):
        compose(X + Y, [x, Y])


def test_taylor_quadratic_examples():
    q = taylor_quadratic(X**2 + Y**2, (0, 0))
    assert q.matrix == ((1, 0), (0, 1))
    f = (X**3 - X) ** 2 + (Y**3 - Y) ** 2
    assert taylor_quadratic(f, (1, 1)).matrix == ((4, 0), (0, 4))


def test_round_zeros():
    f = (X**3 - X) ** 2 + (Y**3 - Y) ** 2
    assert is_round(f, (1, 1))
    assert not is_round(X**2 + Y**2, (1, 0))


def test_T_zeros_off_the_seven_points_are_not_round():
    T = catalog.form("T_sextic")
    for pt in [(1, 1, -1), (1, -1, 1), (-1, 1, 1)]:
        assert evaluate(T, pt) == 0
        assert not is_round_projective(T, pt)
    q = taylor_quadratic(dehomogenize(T), (1, -1))
    assert quadform_definiteness(q) != "positive_definite"


def test_definiteness_examples():
    u1, u2, u3 = variables(3)
    q = QuadForm.from_poly(5 * u1**2 + 5 * u2**2 + 5 * u3**2 - 6 * u1 * u2 - 6 * u1 * u3)
    assert quadform_definiteness(q) == "positive_definite"
    Q = QuadForm.from_poly(catalog.quad_Q(u1, u2, u3))
    assert quadform_definiteness(Q) == "indefinite"
    assert Q.value((1, 1, 1)) == -3
    assert quadform_definiteness(QuadForm(((0, 0), (0, 0)))) == "psd_singular"
    assert quadform_definiteness(QuadForm(((-1, 0), (0, -2)))) == "negative_definite"
    assert quadform_definiteness(QuadForm(((-1, 0), (0, 0)))) == "nsd_singular"


def test_text_round_trip_uses_rationals():
    p = Fraction(3, 7) * x**2 * y - Fraction(1, 2) * z**3 + 5
    s = to_text(p)
    assert from_text(s, ["x", "y", "z"]) == p
    q, names = from_json_obj(json.loads(json.dumps(to_json_obj(p))))
    assert q == p and list(names) == ["x", "y", "z"]
    assert loads(dumps(p))[0] == p
    assert "3/7" in json.dumps(to_json_obj(p))


def test_poly_sqrt():
    h = x**3 - 2 * x * y * z + Fraction(1, 3) * z**3
    assert poly_sqrt(h * h) in (h, -h)
    assert poly_sqrt(h * h + z**6) is None


def test_arithmetic_matches_sympy():
    s = symbols(3)
    p = (x + 2 * y - z) ** 4 - Fraction(3, 2) * x * y * z
    assert to_sympy(p, s) == sp.expand((s[0] + 2 * s[1] - s[2]) ** 4 - sp.Rational(3, 2) * s[0] * s[1] * s[2])
    assert from_sympy(to_sympy(p, s), s) == p


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_distributive(a, b, c):
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), points3)
def test_evaluate_is_a_ring_map(a, b, pt):
    assert evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt)
    assert evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt)


@settings(max_examples=60, deadline=None)
@given(polys(nvars=2, max_degree=4))
def test_homogenize_then_dehomogenize(p):
    assert dehomogenize(homogenize(p, max(p.degree(), 0) + 1)) == p
    assert dehomogenize(homogenize(p)) == p


@settings(max_examples=60, deadline=None)
@given(forms(degree=3))
def test_dehomogenize_then_homogenize(F):
    if all(e[2] > 0 for e in F.terms):
        F = F + x**3
    assert homogenize(dehomogenize(F), F.degree()) == F


@settings(max_examples=30, deadline=None)
@given(polys(max_degree=2, max_terms=4), st.lists(polys(max_degree=2, max_terms=3), min_size=3, max_size=3),
       points3)
def test_compose_commutes_with_evaluate(Q, Fs, pt):
    lhs = evaluate(compose(Q, Fs), pt)
    assert lhs == evaluate(Q, [evaluate(F, pt) for F in Fs])


@settings(max_examples=60, deadline=None)
@given(forms(degree=4), small_rationals, points3)
def test_forms_scale_homogeneously(F, lam, pt):
    scaled = [lam * c for c in pt]
    assert evaluate(F, scaled) == lam**4 * evaluate(F, pt)


def _sample_vectors(n, count, rng):
    return [[Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(n)] for _ in range(count)]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.integers(0, 2**32))
def test_definiteness_agrees_with_sampled_signs(upper, seed):
    rng = random.Random(seed)
    a, b, c, d, e, f = (Fraction(v) for v in upper)
    m = [[a, b, c], [b, d, e], [c, e, f]]
    q = QuadForm(tuple(tuple(r) for r in m))
    label = quadform_definiteness(q)
    values = [q.value(v) for v in _sample_vectors(3, 1000, rng) if any(v)]
    if label == "positive_definite":
        assert all(v > 0 for v in values)
    elif label == "negative_definite":
        assert all(v < 0 for v in values)
    elif label == "psd_singular":
        assert all(v >= 0 for v in values)
    elif label == "nsd_singular":
        assert all(v <= 0 for v in values)
    else:
        # the diagonalizing directions always exhibit both signs
        signs = {(d > 0) - (d < 0) for d, _ in q.diagonalize()}
        vecs = [vec for _, vec in q.diagonalize()]
        observed = {(q.value(v) > 0) - (q.value(v) < 0) for v in vecs} | {(v > 0) - (v < 0) for v in values}
        assert {1, -1} <= signs and {1, -1} <= observed
