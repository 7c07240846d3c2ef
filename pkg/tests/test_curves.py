import random
from fractions import Fraction

import pytest

from weddle.curves import (BaseLocusPoint, CurvePoint, DegenerateSecant,
                           GenusTwoCurve, hyperplane_section_degree,
                           kummer_fit, phi, phi_constant_on_secant,
                           quadric_restriction_check, quadrics_through_curve,
                           sec_octic, secant_point, sample_secant_points,
                           tricanonical, weddle_prime_fit,
                           weierstrass_images, weierstrass_tangent_sample,
                           _proj_eq)
from weddle.fields import CC, GF, QQ

P = 101
DOM = GF(P)


@pytest.fixture(scope="module")
def curve():
    return GenusTwoCurve(DOM, roots=[0, 1, 2, 3, 4, 5])


@pytest.fixture(scope="module")
def weddle(curve):
    return weddle_prime_fit(curve, random.Random(0))


def test_curve_validation():
    with pytest.raises(ValueError):
        GenusTwoCurve(DOM, roots=[0, 1, 2, 3, 4, 4])  # repeated root
    with pytest.raises(ValueError):
        GenusTwoCurve(DOM, coeffs=[1, 0, 0, 0, 0, 0, 0])  # constant leading 0... degree ok but f = 1? actually fine
    GenusTwoCurve(QQ, roots=[0, 1, 2, 3, 4, 5])


def test_point_on_curve_validation(curve):
    w = curve.weierstrass_points()[2]
    assert w.is_weierstrass
    with pytest.raises(ValueError):
        curve.point(6, 1)  # f(6) = 720, 1 is not its square root


def test_tricanonical_weierstrass_fixed(curve):
    for w in curve.weierstrass_points():
        v = tricanonical(w, DOM)
        x = w.x
        assert v == (DOM.one(), x, x * x, x * x * x, DOM.zero())
        lam = curve.involution(w)
        assert tricanonical(lam, DOM) == v


def test_tricanonical_involution_flips_last(curve):
    for _ in range(20):
        p = curve.sample_point(random.Random(1))
        v = tricanonical(p, DOM)
        vl = tricanonical(curve.involution(p), DOM)
        assert vl[:4] == v[:4] and vl[4] == -v[4]


def test_minus_section_vanishes_exactly_at_weierstrass(curve):
    # the last coordinate is y; its zero set on the curve is y = 0
    for x in range(P):
        fx = curve.f(DOM.from_int(x))
        if DOM.is_zero(fx):
            assert any(w.x == DOM.from_int(x) for w in curve.weierstrass_points())


def test_infinity_points(curve):
    plus = CurvePoint(None, None, at_infinity=True, infinity_sign=1)
    v = tricanonical(plus, DOM)
    assert v == (DOM.zero(), DOM.zero(), DOM.zero(), DOM.one(), DOM.one())
    from weddle.curves import ChartError
    with pytest.raises(ChartError):
        tricanonical(CurvePoint(None, None), DOM)


def test_embedding_degree_six(curve):
    assert hyperplane_section_degree(curve, random.Random(2)) == [6] * 5


def test_secant_factors_through_involution(curve):
    r = random.Random(3)
    for _ in range(100):
        p, q = curve.sample_point(r), curve.sample_point(r)
        try:
            s1 = secant_point(p, q, DOM)
            s2 = secant_point(curve.involution(p), curve.involution(q), DOM)
        except DegenerateSecant:
            continue
        assert _proj_eq(s1, s2, DOM)


def test_secant_orbit_injectivity(curve):
    r = random.Random(4)
    seen = {}
    for _ in range(1000):
        p, q = curve.sample_point(r), curve.sample_point(r)
        try:
            s = secant_point(p, q, DOM)
        except DegenerateSecant:
            continue
        k = next(i for i, x in enumerate(s) if not DOM.is_zero(x))
        inv = DOM.one() / s[k]
        key = tuple((x * inv).val for x in s)
        orbit = frozenset({(p.x.val, p.y.val), (q.x.val, q.y.val),
                           (p.x.val, (-p.y).val), (q.x.val, (-q.y).val)})
        assert seen.get(key, orbit) == orbit
        seen[key] = orbit


def test_secant_degenerate_cases(curve):
    w = curve.weierstrass_points()
    with pytest.raises(DegenerateSecant):
        secant_point(w[0], w[1], DOM)
    p = curve.sample_point(random.Random(5))
    with pytest.raises(DegenerateSecant):
        secant_point(p, p, DOM)


def test_weddle_fit(curve, weddle):
    assert weddle.fit_nullity == 1
    assert weddle.nodes_singular
    assert len(weddle.line_results) == 25
    assert all(ok for ok, _ in weddle.line_results)
    assert weddle.rigidity_nullity == 1
    assert weddle.rigidity_matches
    # fresh secant samples lie on the quartic exactly
    for s in sample_secant_points(curve, random.Random(6), 20):
        assert DOM.is_zero(weddle.quartic.evaluate(list(s)))


def test_quadrics_through_curve(curve):
    fit = quadrics_through_curve(curve, random.Random(7))
    assert len(fit.forms) == 4
    for _ in range(20):
        p = curve.sample_point(random.Random(8))
        v = tricanonical(p, DOM)
        for q in fit.forms:
            assert DOM.is_zero(q.evaluate(list(v)))
    restr = quadric_restriction_check(curve, fit.forms)
    assert restr["injective"]
    assert restr["vanish_at_nodes"]
    assert restr["target_dimension"] == 4
    assert restr["same_span"]


def test_phi_base_locus_and_generic(curve):
    quadrics = quadrics_through_curve(curve, random.Random(9)).forms
    p = curve.sample_point(random.Random(10))
    with pytest.raises(BaseLocusPoint):
        phi(quadrics, tricanonical(p, DOM), DOM)
    # generic point off the curve maps somewhere
    v = (DOM.one(), DOM.from_int(7), DOM.from_int(3), DOM.from_int(2),
         DOM.from_int(11))
    img = phi(quadrics, v, DOM)
    assert any(not DOM.is_zero(x) for x in img)


def test_phi_constant_on_secants_and_tangents(curve):
    assert phi_constant_on_secant(curve, random.Random(11))
    quadrics = quadrics_through_curve(curve, random.Random(12)).forms
    imgs = [phi(quadrics, weierstrass_tangent_sample(curve, i, 1), DOM)
            for i in range(6)]
    for img in imgs[1:]:
        assert _proj_eq(imgs[0], img, DOM)


def test_image_of_secant_hyperplane_point_matches_secant_image(curve):
    # the hyperplane trace of a secant maps to the same point as any other
    # point of that secant
    quadrics = quadrics_through_curve(curve, random.Random(16)).forms
    r = random.Random(17)
    done = 0
    while done < 10:
        p, q = curve.sample_point(r), curve.sample_point(r)
        try:
            s = secant_point(p, q, DOM)
        except DegenerateSecant:
            continue
        s5 = list(s) + [DOM.zero()]
        P = tricanonical(p, DOM)
        Q = tricanonical(q, DOM)
        mid = [a + b for a, b in zip(P, Q)]
        try:
            img1 = phi(quadrics, s5, DOM)
            img2 = phi(quadrics, mid, DOM)
        except BaseLocusPoint:
            continue
        assert _proj_eq(img1, img2, DOM)
        done += 1


def test_kummer_sixteen_nodes(curve):
    rep = kummer_fit(curve, random.Random(13))
    assert rep.fit_nullity == 1
    assert len(rep.nodes) == 16
    assert rep.nodes_distinct
    assert rep.nodes_singular
    assert rep.origin_node_consistent


def test_sec_octic(curve, weddle):
    rep = sec_octic(curve, random.Random(14), weddle=weddle.quartic)
    assert rep.fit_nullity == 1
    assert rep.restriction_is_weddle_square
    assert rep.fresh_residual_ok
    assert rep.curve_singular


def test_float_path_matches_narrative():
    c = GenusTwoCurve(CC, roots=[0, 1, 2, 3, 4, 5])
    rep = weddle_prime_fit(c, random.Random(15))
    assert rep.fit_nullity == 1
    assert rep.nodes_singular
    assert all(ok for ok, _ in rep.line_results)
