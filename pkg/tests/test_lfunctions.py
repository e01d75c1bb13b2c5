import math
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from zetaaudit.characters import class_number
from zetaaudit.lfunctions import (
    beta_odd,
    euler_kronecker,
    l_one_closed_form,
    l_prime_1,
    l_value,
    l_value_euler,
    l_value_via_fe,
    madelung_m2,
    madelung_m2_stieltjes,
    selberg_chowla_half,
    selberg_chowla_series,
    zeta_prime_half_routes,
)
from zetaaudit.special import CATALAN, EULER_GAMMA, log_gamma

FE_DISCS = [-3, -4, 5, -7, 8, -8, 12]
ROUTE_DISCS = [-3, -4, 5, -7, 8, -8, 12, -11, -23]
# 40-digit mpmath values of the Hurwitz-combination definition
MP_L = [(-7, 2.0, 1.151925470544491), (-23, 2.0, 1.4032169045950413), (8, 3.0, 0.9583804545630945),
        (12, 0.5, 0.4985570024578154), (-3, 0.25, 0.4098625188992989), (-11, 0.5, 0.9915770035816175),
        (5, -1.0, -0.4), (-4, -1.0, 0.0)]


def test_l_value_examples():
    r = l_value(-4, 2.0)
    assert abs(r.value - CATALAN) < 1e-14 and r.route == "hurwitz" and r.err_estimate >= 0
    assert abs(l_value(5, 2.0).value - 4 * math.pi**2 / (25 * math.sqrt(5))) < 1e-13
    assert abs(l_value(-3, 1.0).value - math.pi / (3 * math.sqrt(3))) < 1e-13
    assert abs(l_value(1, 2.0).value - math.pi**2 / 6) < 1e-13
    with pytest.raises(ValueError):
        l_value(6, 2.0)


@pytest.mark.parametrize("D, s, v", MP_L)
def test_l_value_reference(D, s, v):
    assert abs(l_value(D, s).value - v) < 1e-11


def test_euler_product_examples():
    r = l_value_euler(-4, 2.0, 10**7)
    assert r.route == "euler_product"
    assert abs(r.value - CATALAN) <= r.err_estimate
    z = l_value_euler(1, 2.0, 10**7)
    assert abs(z.value - math.pi**2 / 6) <= z.err_estimate
    t = l_value_euler(-3, 3.0, 10**5)
    assert abs(t.value - 4 * math.pi**3 / (81 * math.sqrt(3))) <= t.err_estimate
    with pytest.raises(ValueError):
        l_value_euler(-4, 1.0)


@pytest.mark.parametrize("D", ROUTE_DISCS)
def test_route_agreement(D):
    for s in (2.0, 3.0, 4.0):
        e = l_value_euler(D, s, 10**7)
        assert abs(l_value(D, s).value - e.value) < e.err_estimate + 1e-10


def test_fe_center_fixed_point():
    r = l_value_via_fe(-4, 0.5)
    assert abs(r.value - l_value(-4, 0.5).value) < 1e-13
    assert r.route == "functional_eq" and r.s == 0.5


@pytest.mark.parametrize("D", FE_DISCS)
@pytest.mark.parametrize("s", [0.25, 0.75, 2.0, 3.0])
def test_fe_residual(D, s):
    assert abs(l_value(D, 1 - s).value - l_value_via_fe(D, s).value) < 1e-9


def test_fe_pole_rejected():
    # Gamma(-1) meets the trivial zero of L_-4 at -1
    with pytest.raises(ValueError):
        l_value_via_fe(-4, -1.0)


def test_l_at_one_closed_forms():
    for D in (-3, -4):
        assert abs(l_one_closed_form(D).value - l_value(D, 1.0).value) < 1e-10
    for D in (-7, -8, -11, -23):
        h = class_number(D).h
        assert abs(l_one_closed_form(D, h).value - math.pi * h / math.sqrt(-D)) < 1e-15
        assert abs(l_one_closed_form(D, h).value - l_value(D, 1.0).value) < 1e-10
    for D in (5, 8, 12):
        assert abs(l_one_closed_form(D, 1).value - l_value(D, 1.0).value) < 1e-10


def test_l_prime_one():
    closed = math.pi / 4 * (EULER_GAMMA + 2 * math.log(2) + 3 * math.log(math.pi) - 4 * log_gamma(0.25))
    assert abs(l_prime_1(-4) - closed) < 1e-12
    assert abs(l_prime_1(-3) - 0.22266298712993599) < 1e-9
    for D in (-4, -3, 5):
        h = 1e-4
        fd = (l_value(D, 1 + h).value - l_value(D, 1 - h).value) / (2 * h)
        assert abs(l_prime_1(D) - fd) < 1e-7


def test_euler_kronecker():
    s = euler_kronecker(-4)
    assert abs(s - 0.8228252496) < 1e-9
    closed4 = math.log(2 * math.pi) + 2 * EULER_GAMMA + 2 * log_gamma(0.75) - 2 * log_gamma(0.25)
    closed3 = math.log(2 * math.pi) + 2 * EULER_GAMMA + 3 * log_gamma(2 / 3) - 3 * log_gamma(1 / 3)
    assert abs(s - closed4) < 1e-13
    assert abs(euler_kronecker(-3) - closed3) < 1e-13


def test_beta_odd():
    assert abs(beta_odd(0) - math.pi / 4) < 1e-15
    assert abs(beta_odd(1) - math.pi**3 / 32) < 1e-15
    assert abs(beta_odd(2) - 5 * math.pi**5 / 1536) < 1e-15
    for k in range(6):
        assert abs(beta_odd(k) - l_value(-4, 2 * k + 1).value) < 1e-13
    with pytest.raises(ValueError):
        beta_odd(11)


@pytest.mark.parametrize("p", [11, 19, 43, 67])
def test_selberg_chowla(p):
    lhs, rhs = selberg_chowla_half(p)
    assert abs(lhs - rhs) < 1e-9


def test_selberg_chowla_truncation():
    _, n = selberg_chowla_series(11)
    assert n <= 5
    from zetaaudit.special import bessel_k0

    assert bessel_k0(4 * math.pi * math.sqrt(11)) < 1e-17


def test_selberg_chowla_sum_of_divisors_residual():
    lhs, rhs = selberg_chowla_half(11, divisor_power=1)
    from zetaaudit.special import bessel_k0

    assert abs((rhs - lhs) - 4 * bessel_k0(2 * math.pi * math.sqrt(11))) < 1e-13


def test_selberg_chowla_outside_list_warns():
    with pytest.warns(UserWarning):
        selberg_chowla_half(7)


def test_madelung():
    m = madelung_m2()
    assert m < 0
    assert abs(m - -1.6155426267128248) < 1e-10
    assert abs(madelung_m2_stieltjes() - m) < 1e-8


def test_zeta_prime_half_routes():
    target = -4 - -3.9226461392091516
    for v in zeta_prime_half_routes():
        assert abs(v - target) < 1e-7


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FE_DISCS), st.floats(0.05, 0.95))
def test_fe_property_in_strip(D, s):
    assert abs(l_value(D, 1 - s).value - l_value_via_fe(D, s).value) < 1e-9
