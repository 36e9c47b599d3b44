from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moricone.divisors import (
    as_rat,
    brill_noether_class,
    brill_noether_factorization,
    canonical_divisor,
    delta_class,
    delta_i_class,
    k_alpha,
    lambda_class,
    linear_combination,
    make_divisor,
    moriwaki_divisor,
    petri_hat_class,
    proportional_to,
    slope,
    zero_class,
)
from moricone.errors import (
    AlphaRangeError,
    CoefficientCountError,
    GenusError,
    GenusMismatchError,
    MoriconeError,
    WitnessUnavailableError,
)

F = Fraction


def coeffs(D):
    return (D.a, list(D.b))


def test_make_divisor_examples():
    assert make_divisor(3, 28, [3, 8]) == moriwaki_divisor(3)
    assert make_divisor(3, 0, [0, 0]).is_zero()
    assert make_divisor(4, 13, [2, 3, 2]) == canonical_divisor(4)


def test_make_divisor_errors():
    with pytest.raises(GenusError):
        make_divisor(2, 1, [0, 0])
    with pytest.raises(CoefficientCountError) as exc:
        make_divisor(3, 1, [0])
    assert exc.value.code == "wrong-coefficient-count"
    with pytest.raises(TypeError):
        make_divisor(3, 1.5, [0, 0])


@pytest.mark.parametrize(
    "g, expected",
    [(3, (28, [3, 8])), (4, (36, [4, 12, 16])), (5, (44, [5, 16, 24]))],
)
def test_moriwaki_divisor(g, expected):
    assert coeffs(moriwaki_divisor(g)) == expected


def test_canonical_divisor():
    assert coeffs(canonical_divisor(3)) == (13, [2, 3])
    assert coeffs(canonical_divisor(4)) == (13, [2, 3, 2])
    K = canonical_divisor(22)
    # delta_0 plus delta_1..delta_11
    assert len(K.b) == 12 and K.b[:2] == (2, 3) and set(K.b[2:]) == {2}


def test_k_alpha():
    assert coeffs(k_alpha(3, 1)) == (13, [1, 1])
    assert coeffs(k_alpha(3, 0)) == (13, [2, 2])
    assert coeffs(k_alpha(3, F(17, 28))) == (13, [F(39, 28), F(39, 28)])
    with pytest.raises(AlphaRangeError):
        k_alpha(3, F(-1, 2))


def test_brill_noether_class():
    assert coeffs(brill_noether_class(3).base) == (6, [F(2, 3), 2])
    assert coeffs(brill_noether_class(5).base) == (8, [1, 4, 6])
    assert brill_noether_factorization(3) == (1, 3)
    with pytest.raises(WitnessUnavailableError) as exc:
        brill_noether_class(4)
    assert exc.value.code == "g-plus-one-prime"


def test_petri_hat_class():
    # lambda coefficient 6d^2 + d - 6 is 51 at d = 3
    w = petri_hat_class(4)
    assert coeffs(w.base) == (51, [6, 21, 27])
    assert w.kind.d == 3 and w.kind.gammas == ()
    w = petri_hat_class(6)
    assert coeffs(w.base) == (94, [12, 50, 78, 84])
    assert list(w.kind.gammas) == [4]
    with pytest.raises(WitnessUnavailableError) as exc:
        petri_hat_class(3)
    assert exc.value.code == "g-plus-one-not-prime"


def test_petri_hat_needs_even_genus():
    with pytest.raises(MoriconeError):
        petri_hat_class(5)


def test_linear_combination():
    M = moriwaki_divisor(3)
    assert linear_combination([(1, M), (-1, M)]).is_zero()
    assert coeffs(linear_combination([(F(1, 28), M)])) == (1, [F(3, 28), F(2, 7)])
    alpha = 1
    D = linear_combination([(13, lambda_class(3)), (-(2 - alpha), delta_class(3))])
    assert D == k_alpha(3, 1)
    with pytest.raises(MoriconeError):
        linear_combination([])
    with pytest.raises(GenusMismatchError):
        linear_combination([(1, M), (1, moriwaki_divisor(4))])


def test_delta_sign_convention():
    # delta is the sum of the delta_i, stored with b_i = -1
    g = 6
    total = zero_class(g)
    for i in range(4):
        total = total + delta_i_class(g, i)
    assert total == delta_class(g)
    assert delta_class(g).natural() == (0, (1, 1, 1, 1))


def test_slope():
    assert slope(brill_noether_class(5).base) == 8 == 6 + F(12, 6)
    assert slope(moriwaki_divisor(3)) == F(28, 3)
    for g in range(3, 30):
        star = F(3 * g + 8, 8 * g + 4)
        assert slope(k_alpha(g, star)) == F(8 * g + 4, g)
    with pytest.raises(MoriconeError):
        slope(lambda_class(3))


def test_proportional_to():
    for g in (3, 7, 22):
        star = F(3 * g + 8, 8 * g + 4)
        ch = make_divisor(g, 8 * g + 4, [g] * (g // 2 + 1))
        assert proportional_to(k_alpha(g, star), ch) == F(13, 8 * g + 4)
    assert proportional_to(moriwaki_divisor(5), moriwaki_divisor(5)) == 1
    assert proportional_to(lambda_class(3), delta_class(3)) is None
    assert proportional_to(moriwaki_divisor(3), -moriwaki_divisor(3)) is None


def test_as_rat():
    assert as_rat("3/6") == F(1, 2)
    assert as_rat(4) == 4
    for bad in ("x", "1/0", 0.5, True):
        with pytest.raises((TypeError, ValueError)):
            as_rat(bad)


rats = st.fractions(min_value=-100, max_value=100, max_denominator=50)


def classes(g):
    return st.builds(
        lambda a, b: make_divisor(g, a, b), rats, st.lists(rats, min_size=g // 2 + 1, max_size=g // 2 + 1)
    )


@given(classes(7), classes(7), rats)
def test_vector_space_laws(D, E, t):
    assert D + E == E + D
    assert (D + E) * t == D * t + E * t
    assert D - D == zero_class(7)
    assert linear_combination([(t, D), (1, E)]) == D * t + E
