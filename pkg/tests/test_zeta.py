import math

import pytest
from hypothesis import given, settings, strategies as st

from zetaaudit.special import CATALAN, log_gamma
from zetaaudit.zeta import (
    QuadForm,
    crit_strip_bounds,
    epstein_exponential_series,
    epstein_partial_zeta,
    hurwitz_params,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    hurwitz_zeta_ds_regular,
    hurwitz_zeta_regular,
    riemann_zeta,
    zeta_crit_strip,
)

GAMMA1 = -0.07281584548367673  # mpmath stieltjes(1)


def test_riemann_even_values():
    assert abs(riemann_zeta(2.0) - math.pi**2 / 6) < 1e-12
    assert abs(riemann_zeta(4.0) - math.pi**4 / 90) < 1e-12


def test_hurwitz_examples():
    assert abs(hurwitz_zeta(2.0, 1.0) - math.pi**2 / 6) < 1e-13
    assert abs(hurwitz_zeta(0.0, 1 / 3) - hurwitz_zeta(0.0, 2 / 3) - 1 / 3) < 1e-13
    assert abs(hurwitz_zeta(2.0, 0.25) - hurwitz_zeta(2.0, 0.75) - 16 * CATALAN) < 1e-12


@pytest.mark.parametrize(
    "s, a, v",
    [(2.5, 0.3, 21.069239202247726), (-3.5, 0.7, -0.005311785327807164), (0.5, 0.25, 0.23996352449563096)],
)
def test_hurwitz_reference_values(s, a, v):
    assert abs(hurwitz_zeta(s, a) - v) < 1e-12 * max(1, abs(v))


def test_hurwitz_domain():
    with pytest.raises(ValueError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(ValueError):
        hurwitz_zeta(2.0, 0.0)


def test_hurwitz_params_invariants():
    p = hurwitz_params(3.0, 0.25)
    assert p.N >= 8 and 1 <= p.J <= 12 and p.remainder < 1e-12


@pytest.mark.parametrize("a", [0.25, 1 / 3, 1.0])
@pytest.mark.parametrize("j", [2, 3, 4, 5])
def test_pole_residue(a, j):
    for s in (1 + 10.0**-j, 1 - 10.0**-j):
        assert abs((s - 1) * hurwitz_zeta(s, a) - 1) < 2 * 10.0**-j * (abs(math.log(a)) + 1)


@settings(max_examples=80)
@given(st.floats(-5, 8).filter(lambda s: abs(s - 1) > 1e-3), st.floats(0.01, 3))
def test_hurwitz_ladder(s, a):
    lhs = hurwitz_zeta(s, a)
    rhs = hurwitz_zeta(s, a + 1) + a**-s
    assert abs(lhs - rhs) < 1e-12 * max(1, abs(lhs), a**-s)


@settings(max_examples=60)
@given(st.floats(0.01, 4))
def test_negative_one_bernoulli(a):
    assert abs(hurwitz_zeta(-1.0, a) + (a * a - a + 1 / 6) / 2) < 1e-12 * max(1, a * a)


def test_regular_parts_through_pole():
    assert abs(hurwitz_zeta_regular(1.0, 1.0) - 0.5772156649015329) < 1e-13
    assert abs(hurwitz_zeta_ds_regular(1.0, 1.0) + GAMMA1) < 1e-12
    for h in (1e-4, -1e-4):
        assert abs(hurwitz_zeta_ds(1 + h, 1.0) + 1 / h**2 + GAMMA1) < 1e-3


def test_derivative_examples():
    assert abs(hurwitz_zeta_ds(0.0, 1.0) + 0.5 * math.log(2 * math.pi)) < 1e-12
    assert abs(hurwitz_zeta_ds(2.0, 1.0) - -0.9375482543158438) < 1e-12
    assert abs(hurwitz_zeta_ds(0.5, 1.0) - -3.9226461392091516) < 1e-11
    h = 1e-5
    fd = (hurwitz_zeta(2 + h, 1.0) - hurwitz_zeta(2 - h, 1.0)) / (2 * h)
    assert abs(hurwitz_zeta_ds(2.0, 1.0) - fd) < 1e-8


@pytest.mark.parametrize("a", [0.3, 0.5, 1.7])
def test_lerch_at_zero(a):
    assert abs(hurwitz_zeta_ds(0.0, a) - (log_gamma(a) - 0.5 * math.log(2 * math.pi))) < 1e-11


def test_crit_strip_examples():
    z = zeta_crit_strip(0.5)
    assert abs(z - -1.4603545088095868) < 1e-10
    assert -1.5 + 1 / (15 * math.sqrt(5)) < z < -35 / 24
    ratio = zeta_crit_strip(0.75) / zeta_crit_strip(0.25)
    closed = math.sqrt(2 + math.sqrt(2)) * math.exp(log_gamma(0.25)) / (2 * math.pi) ** 0.25
    assert abs(ratio - closed) < 1e-10
    with pytest.raises(ValueError):
        zeta_crit_strip(1.0)


@pytest.mark.parametrize("s", [k / 10 for k in range(1, 10)])
def test_crit_strip_matches_hurwitz(s):
    assert abs(zeta_crit_strip(s) - hurwitz_zeta(s, 1.0)) < 2e-10


@pytest.mark.parametrize("s", [0.25, 0.5])
def test_crit_strip_bounds(s):
    b = crit_strip_bounds(s)
    assert b.holds
    assert abs(b.lower_integral - b.lower_quad) < 1e-10
    assert abs(b.upper_integral - b.upper_quad) < 1e-10
    assert b.crude_lower < b.lower < b.upper < b.crude_upper
    if s == 0.5:
        assert abs(b.lower_integral - 0.5 * (1 + 2 / (15 * math.sqrt(5)))) < 1e-10
        assert abs(b.upper_integral - 13 / 24) < 1e-10


def test_quadform_basics():
    assert QuadForm(1, 1, 6).discriminant == -23
    with pytest.raises(ValueError):
        QuadForm(1, 3, 1)


def test_epstein_gaussian_form():
    v, tail = epstein_partial_zeta(QuadForm(1, 0, 1), 2.0, 400, weight=1.0)
    target = 4 * (math.pi**2 / 6) * CATALAN
    assert abs(v - target) <= tail
    assert tail < 1e-4


def test_epstein_fold_invariance():
    f = QuadForm(2, 1, 3)
    assert epstein_partial_zeta(f, 2.0, 150) == pytest.approx(epstein_partial_zeta(f, 2.0, 150, fold=True), rel=1e-15)


def test_epstein_dedekind_factorization():
    from zetaaudit.lfunctions import l_value

    z0, t0 = epstein_partial_zeta(QuadForm(1, 1, 6), 2.0, 400)
    z1, t1 = epstein_partial_zeta(QuadForm(2, 1, 3), 2.0, 400)
    target = math.pi**2 / 6 * l_value(-23, 2.0).value
    assert abs(z0 + 2 * z1 - target) <= t0 + 2 * t1
    series = epstein_exponential_series(QuadForm(1, 1, 6)) + 2 * epstein_exponential_series(QuadForm(2, 1, 3))
    assert abs(series - target) < 1e-13
