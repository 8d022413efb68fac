from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tdpair import NotTDPair, TDPair, drinfeld_checks, drinfeld_poly, leonard_krawtchouk, onsager_tensor

from conftest import build

params = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def test_k12_and_k13():
    assert list(drinfeld_poly(build("1:2")).P.coeffs) == [1, F(-9, 8)]
    assert str(drinfeld_poly(build("1:2"))) == "1 - 9/8 λ"
    assert list(drinfeld_poly(build("1:3")).P.coeffs) == [1, F(-4, 3)]


@settings(max_examples=30, deadline=None)
@given(params)
def test_diameter_one_closed_form(a):
    assume(a not in (0, 1, -1))
    # 2x2 hand computation: zeta_1 = (1 + a)^2 / a
    p = drinfeld_poly(leonard_krawtchouk(1, a)).P
    assert list(p.coeffs) == [1, -(1 + a) ** 2 / (4 * a)]


@settings(max_examples=15, deadline=None)
@given(params)
def test_reciprocal_parameter_same_polynomial(a):
    assume(a not in (0, 1, -1))
    assert drinfeld_poly(leonard_krawtchouk(2, a)).P == drinfeld_poly(leonard_krawtchouk(2, 1 / a)).P


@pytest.mark.parametrize("spec", ["1:2", "2:2", "1:2,1:3", "2:2,1:3"])
def test_normalisation_and_factor_product(spec):
    rep = drinfeld_checks(build(spec))
    assert rep["constant_is_one"] and rep["nonzero_at_one"]
    assert rep["multiplicative"] == "holds"


def test_degree_equals_diameter():
    pair = onsager_tensor("1:2,1:3,1:5")
    assert drinfeld_poly(pair).P.degree == pair.diameter == 3


def test_requires_krawtchouk_type(k12):
    with pytest.raises(NotTDPair):
        drinfeld_poly(TDPair(k12.A * 2, k12.Astar))


def test_diameter_zero():
    p = drinfeld_poly(leonard_krawtchouk(0, 2))
    assert list(p.P.coeffs) == [1]
    assert "multiplicative" not in drinfeld_checks(leonard_krawtchouk(0, 2))
