from __future__ import annotations

import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from hilbertsos import catalog
from hilbertsos.polycore import Poly, evaluate, from_text, homogenize, in_span, same_span, variables
from hilbertsos.pointideal import (
    ConfigurationError,
    DualWitness,
    PointSet,
    copacetic,
    exact_point,
    forced_zeros,
    fullness,
    gap_element,
    geometry_report,
    phi_psi,
    point_is_exact,
    product_span,
    sign_at,
    singular_cubic,
    vanishes_to_order,
    vanishing_basis,
)

from oracle import vanishing_dimension

X, Y = variables(2)
x, y, z = variables(3)

PSI_PRINTED = ("-6136 + 2924*x + 5784*x^2 - 2924*x^3 + 352*x^4 - 2804*y - 7000*x*y + 6299*x^2*y"
               " - 1049*x^3*y + 5818*y^2 - 7803*x*y^2 + 1811*x^2*y^2 + 2804*y^3 - 1402*x*y^3 + 318*y^4")


def _proportional(p: Poly, q: Poly) -> bool:
    (e, c) = p.leading()
    return q.coeff(e) != 0 and p * q.coeff(e) == q * c


def test_robinson_geometry(robinson_points):
    rep = geometry_report(robinson_points)
    assert rep.max_collinear == 3
    # two of the lines x = +-1 carry six points, a degenerate conic
    assert rep.max_on_conic == 6


def test_eight_point_geometry(eight_points):
    rep = geometry_report(eight_points)
    assert rep.max_collinear == 2
    assert rep.max_on_conic == 5


def test_three_collinear_points_lie_on_a_conic():
    rep = geometry_report(PointSet.affine([(0, 0), (1, 1), (2, 2)]))
    assert rep.max_collinear == 3 and rep.all_on_conic


def test_robinson_cubic_basis(robinson_points):
    b = vanishing_basis(robinson_points, 3, 1)
    assert b.dim == 2
    assert same_span(list(b.basis), [X**3 - X, Y**3 - Y])
    assert vanishing_basis(robinson_points, 6, 2).dim == 4


def test_seven_point_cubic_basis(seven_points):
    b = vanishing_basis(seven_points, 3, 1)
    assert b.dim == 3
    assert same_span(list(b.basis), list(catalog.seven_point_cubics(x, y, z)))


def test_product_span_examples(robinson_points, seven_points):
    ps = product_span(vanishing_basis(robinson_points, 3, 1))
    assert len(ps.products) == 3 and ps.independent
    ps7 = product_span(vanishing_basis(seven_points, 3, 1))
    assert len(ps7.products) == 6 and ps7.independent
    assert not product_span([X, 2 * X]).independent


def test_robinson_gap_contains_known_sextic(robinson_points):
    gap = gap_element(robinson_points, 3)
    assert gap is not None
    f1, f2 = X**3 - X, Y**3 - Y
    known = (X**2 - 1) * (Y**2 - 1) * (1 - X**2 - Y**2)
    assert vanishes_to_order(known, robinson_points, 2)
    assert in_span(known, [f1 * f1, f1 * f2, f2 * f2, gap.g])
    assert not in_span(known, [f1 * f1, f1 * f2, f2 * f2])


def test_seven_point_gap(seven_points):
    gap = gap_element(seven_points, 3)
    assert gap is not None
    G = (x**2 - y**2) * (x**2 - z**2) * (y**2 - z**2)
    assert vanishes_to_order(G, seven_points, 2)
    products = list(gap.products.products)
    assert not in_span(G, products)
    assert in_span(G, products + [gap.g])


def test_single_point_has_no_gap():
    assert gap_element(PointSet.affine([(0, 0)]), 1) is None


def test_forced_zero_examples(robinson_points, seven_points, eight_points, ninth_point):
    fz = forced_zeros(vanishing_basis(eight_points, 3, 1))
    assert [exact_point(p) for p in fz.affine] == [ninth_point]
    assert fz.at_infinity == ()
    fz = forced_zeros(vanishing_basis(robinson_points, 3, 1))
    assert [exact_point(p) for p in fz.affine] == [(0, 0)]
    assert fz.at_infinity == ()
    fz = forced_zeros(vanishing_basis(seven_points, 3, 1))
    assert len(fz) == 0


def test_fullness_examples(robinson_points, seven_points):
    assert fullness(robinson_points, vanishing_basis(robinson_points, 3, 1))
    assert fullness(seven_points, vanishing_basis(seven_points, 3, 1))
    assert not fullness(PointSet.affine([(0, 0)]), [X**2, X * Y])


def test_copacetic_examples(robinson_points):
    assert copacetic(robinson_points)
    t = Fraction(3, 2)
    At = PointSet.affine([(1, 1), (1, -1), (-1, 1), (-1, -1), (t, 0), (-t, 0), (0, t), (0, -t)])
    assert copacetic(At)
    fz = forced_zeros(vanishing_basis(At, 3, 1))
    assert [exact_point(p) for p in fz.affine] == [(0, 0)]


def test_copacetic_rejects_degenerate_input():
    pts = [(k, 0) for k in range(5)] + [(0, 1), (1, 2), (3, 5)]
    with pytest.raises(ConfigurationError):
        copacetic(PointSet.affine(pts))


def test_phi_psi_reproduces_printed_curves(eight_points, ninth_point):
    A9 = PointSet.affine(list(eight_points.points) + [ninth_point])
    res = phi_psi(A9, ([0, 1, 2, 3, 4], [5, 6, 7], [8]))
    assert _proportional(res.phi, X**2 - X * Y + Y**2 - 1)
    assert _proportional(res.psi, from_text(PSI_PRINTED, ["x", "y"]))
    assert res.value_at_ninth != 0
    assert vanishes_to_order(res.phi * res.psi, eight_points, 2)


def test_phi_psi_bad_partition(eight_points, ninth_point):
    A9 = PointSet.affine(list(eight_points.points) + [ninth_point])
    with pytest.raises(ConfigurationError):
        phi_psi(A9, ([0, 1, 2, 3], [4, 5, 6, 7], [8]))


def test_phi_psi_on_robinson_grid_is_reported():
    A9 = PointSet.affine([(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0)] + [(0, 0)])
    try:
        res = phi_psi(A9, ([0, 1, 2, 3, 4], [5, 6, 7], [8]))
    except ConfigurationError:
        return
    assert vanishes_to_order(res.phi * res.psi, A9.subset(range(8)), 2)


def test_singular_cubic_examples():
    c = singular_cubic((0, 0), [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
    assert c == X**2 * Y - X * Y**2
    pts = catalog.SEVEN_POINTS
    c7 = singular_cubic(pts[0], pts[1:])
    assert vanishes_to_order(c7, PointSet.projective(pts[:1]), 2)
    assert all(evaluate(c7, p) == 0 for p in pts)


def test_singular_cubic_rejects_four_on_a_line():
    with pytest.raises(ConfigurationError):
        singular_cubic((0, 0), [(1, 0), (2, 0), (3, 0), (0, 1), (1, 5), (2, 7)])


def test_witness_json_round_trip(robinson_points):
    gap = gap_element(robinson_points, 3)
    w = DualWitness.from_json_obj(json.loads(json.dumps(gap.witness.to_json_obj())))
    assert w == gap.witness
    assert w.verify(gap.g)


def test_pointset_json_round_trip(eight_points, seven_points):
    for A in (eight_points, seven_points):
        assert PointSet.loads(A.dumps()) == A


coords = st.integers(-3, 3)
affine_configs = st.lists(st.tuples(coords, coords), min_size=1, max_size=7, unique=True)


@settings(max_examples=100, deadline=None)
@given(affine_configs, st.integers(1, 4), st.sampled_from([1, 2]))
def test_basis_vanishes_and_meets_dimension_bound(pts, d, s):
    A = PointSet.affine(pts)
    b = vanishing_basis(A, d, s)
    assert b.dim >= comb(2 + d, 2) - len(pts) * comb(2 + s - 1, 2)
    for f in b.basis:
        assert vanishes_to_order(f, A, s)


@settings(max_examples=15, deadline=None)
@given(affine_configs, st.integers(1, 3), st.sampled_from([1, 2]))
def test_basis_dimension_matches_sympy(pts, d, s):
    assert vanishing_basis(PointSet.affine(pts), d, s).dim == vanishing_dimension(pts, d, s)


@st.composite
def copacetic_sets(draw):
    pts = draw(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=8, max_size=8, unique=True))
    A = PointSet.affine(pts)
    rep = geometry_report(A)
    assume(rep.max_collinear <= 2 and rep.max_on_conic <= 5)
    assume(copacetic(A))
    return A


@settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(copacetic_sets())
def test_every_cubic_through_eight_points_meets_the_ninth(A):
    b = vanishing_basis(A, 3, 1)
    fz = forced_zeros(b)
    (pt,) = fz.projective_points()
    assert point_is_exact(pt)
    ninth = exact_point(pt)
    forms = [homogenize(f, 3) for f in b.basis]
    for f in forms + [forms[0] - 7 * forms[1]]:
        assert evaluate(f, ninth) == 0


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(st.lists(st.tuples(coords, coords), min_size=2, max_size=8, unique=True))
def test_gap_witness_is_exact(pts):
    A = PointSet.affine(pts)
    try:
        gap = gap_element(A, 3)
    except ValueError:
        assume(False)
    assume(gap is not None)
    w = gap.witness
    assert all(w.pair(q) == 0 for q in gap.products.products)
    assert w.pair(gap.g) != 0


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(st.lists(st.tuples(coords, coords), min_size=6, max_size=8, unique=True))
def test_forced_zeros_are_common_zeros(pts):
    A = PointSet.affine(pts)
    b = vanishing_basis(A, 3, 1)
    assume(b.dim >= 2)
    try:
        fz = forced_zeros(b)
    except ValueError:
        assume(False)
    forms = [homogenize(f, 3) for f in b.basis]
    for p in fz.projective_points():
        for F in forms:
            if point_is_exact(p):
                assert evaluate(F, exact_point(p)) == 0
            else:
                with pytest.raises(ArithmeticError):
                    sign_at(F, p, max_steps=40)
