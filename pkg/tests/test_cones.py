from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from moricone.cones import (
    Prediction,
    Verdict,
    classify_by_pairing,
    classify_moriwaki,
    cone_section,
    dual_curve,
    extremal_rays_by_enumeration,
    facet_bound,
    facet_ids,
    intersect,
    moriwaki_curve_classes,
    moriwaki_decompose,
    moriwaki_extremal_rays,
    predict_base_locus,
    section_class,
)
from moricone.divisors import (
    boundary_count,
    canonical_divisor,
    delta_i_class,
    lambda_class,
    linear_combination,
    make_divisor,
    moriwaki_divisor,
    zero_class,
)
from moricone.errors import ConfigError, NotMoriwakiError

F = Fraction


def test_facets():
    assert facet_ids(3) == ["NonnegA", "Delta0", "Delta1"]
    assert facet_bound(3, 0) == F(28, 3)
    assert facet_bound(3, 1) == F(7, 2)
    assert facet_bound(6, 3) == F(13, 9)


def test_classify_examples():
    K = classify_moriwaki(canonical_divisor(3))
    assert K.verdict is Verdict.OUTSIDE and K.violated == ("Delta0",)
    for g in (3, 4, 11, 30):
        M = classify_moriwaki(moriwaki_divisor(g))
        assert M.verdict is Verdict.BOUNDARY
        assert M.active == tuple(facet_ids(g)[1:])
    assert classify_moriwaki(lambda_class(5)).verdict is Verdict.STRICT


def test_zero_class_is_on_every_facet():
    cls = classify_moriwaki(zero_class(4))
    assert cls.verdict is Verdict.BOUNDARY
    assert cls.active == tuple(facet_ids(4))


def test_curve_classes():
    assert [(c.lam, list(c.dels)) for c in moriwaki_curve_classes(3)] == [
        (1, [0, 0]),
        (3, [28, 0]),
        (2, [0, 7]),
    ]
    C2 = moriwaki_curve_classes(4)[3]
    assert (C2.lam, list(C2.dels)) == (4, [0, 0, 9])
    assert dual_curve(4, "Delta2") == C2


def test_intersect_examples():
    M = moriwaki_divisor(3)
    C, C0, _ = moriwaki_curve_classes(3)
    assert intersect(M, C0) == 0
    assert intersect(M, C) == 28
    assert all(intersect(zero_class(3), c) == 0 for c in moriwaki_curve_classes(3))


def test_moriwaki_decompose():
    beta, E = moriwaki_decompose(moriwaki_divisor(7))
    assert beta == 1 and E.is_zero()
    beta, E = moriwaki_decompose(lambda_class(3))
    assert beta == F(1, 28)
    assert E.natural() == (0, (F(3, 28), F(2, 7)))
    with pytest.raises(NotMoriwakiError) as exc:
        moriwaki_decompose(canonical_divisor(3))
    assert exc.value.code == "not-an-M-divisor"


def test_predictions():
    assert predict_base_locus(lambda_class(3)).statement is Prediction.BPLUS_EQUALS_BOUNDARY
    assert predict_base_locus(moriwaki_divisor(9)).statement is Prediction.BMINUS_IN_BOUNDARY
    assert predict_base_locus(canonical_divisor(22)).statement is Prediction.BMINUS_MEETS_INTERIOR
    strict = moriwaki_divisor(5) + lambda_class(5)
    assert predict_base_locus(strict).statement is Prediction.BPLUS_IN_BOUNDARY


def test_extremal_rays_are_deltas_and_m():
    for g in (3, 4, 9):
        rays = extremal_rays_by_enumeration(g)
        expected = moriwaki_extremal_rays(g)
        assert len(rays) == len(expected) == boundary_count(g) + 1
        as_classes = [make_divisor(g, r[0], r[1:]) for r in rays]
        for D in expected:
            assert any(
                classify_moriwaki(D).active == classify_moriwaki(R).active for R in as_classes
            )


def test_cone_section():
    s = cone_section(3, F(9), 11)
    assert s.mor == ((0, -1), (28, 3))
    assert s.nef == ((1, 0), (11, 1))
    s = cone_section(24, F(162, 25))
    assert s.psef == ((0, -1), (162, 25))
    assert s.mor[1] == (49, 6)
    assert cone_section(4).psef is None
    with pytest.raises(ConfigError):
        cone_section(3, F(-1))
    with pytest.raises(ConfigError):
        cone_section(3, None, 0)


def test_section_rays_are_nested():
    # nef inside Moriwaki inside psef on the plane, compared by slope
    for g in range(3, 40):
        s = cone_section(g, F(13, 2))
        nef_slope = F(*s.nef[1])
        mor_slope = F(*s.mor[1])
        assert nef_slope >= mor_slope >= F(13, 2)
        assert classify_moriwaki(section_class(g, s.mor[1])).verdict is Verdict.BOUNDARY
        assert classify_moriwaki(section_class(g, s.nef[1])).verdict is Verdict.STRICT


# properties

rats = st.fractions(min_value=-200, max_value=200, max_denominator=40)


@st.composite
def divisor(draw, g=None):
    g = draw(st.integers(3, 25)) if g is None else g
    n = boundary_count(g)
    a = draw(rats)
    b = []
    for i in range(n):
        # land exactly on facet i about a third of the time
        if a >= 0 and draw(st.integers(0, 2)) == 0:
            b.append(a / facet_bound(g, i))
        else:
            b.append(draw(rats))
    return make_divisor(g, a, b)


@given(divisor())
def test_duality_property(D):
    assert classify_moriwaki(D) == classify_by_pairing(D)


@given(divisor(), st.fractions(min_value=F(1, 30), max_value=100, max_denominator=30))
def test_scale_invariance(D, t):
    assert classify_moriwaki(D * t) == classify_moriwaki(D)


@given(divisor())
def test_decomposition_roundtrip(D):
    assume(classify_moriwaki(D).verdict is not Verdict.OUTSIDE)
    beta, E = moriwaki_decompose(D)
    assert beta * moriwaki_divisor(D.genus) + E == D
    assert E.a == 0 and all(x >= 0 for x in E.natural()[1])


@given(divisor())
def test_membership_oracle(D):
    """In the cone iff a nonnegative combination of the extremal rays."""
    g = D.genus
    M = moriwaki_divisor(g)
    beta = D.a / M.a
    weights = [beta * M.b[i] - D.b[i] for i in range(boundary_count(g))]
    combo = linear_combination(
        [(beta, M)] + [(w, delta_i_class(g, i)) for i, w in enumerate(weights)]
    )
    assert combo == D  # the rays span, so the coefficients are forced
    in_cone = beta >= 0 and all(w >= 0 for w in weights)
    assert in_cone == (classify_moriwaki(D).verdict is not Verdict.OUTSIDE)
