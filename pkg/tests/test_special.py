import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetaaudit.numerics import de_quadrature
from zetaaudit.special import (
    CATALAN,
    EULER_GAMMA,
    bernoulli,
    bernoulli_table,
    bessel_k0,
    beta_integral,
    bloch_wigner,
    catalan_series,
    clausen2,
    digamma,
    dilog,
    euler_number,
    euler_table,
    log_gamma,
    polygamma,
)
from zetaaudit.zeta import hurwitz_zeta

# reference values from a 40-digit mpmath run
G = 0.915965594177219
GRID = [k / 8 for k in range(1, 8)]


def test_digamma_examples():
    assert abs(digamma(1.0) + EULER_GAMMA) < 1e-15
    assert abs(digamma(2.0) - (1 - EULER_GAMMA)) < 1e-14
    assert abs(digamma(0.75) - digamma(0.25) - math.pi) < 1e-13
    assert abs(digamma(0.3) - -3.502524222200133) < 1e-13
    with pytest.raises(ValueError):
        digamma(0.0)


@pytest.mark.parametrize("x", GRID)
def test_digamma_reflection(x):
    assert abs(digamma(1 - x) - digamma(x) - math.pi / math.tan(math.pi * x)) < 1e-11


def test_polygamma_examples():
    assert abs(polygamma(1, 1.0) - math.pi**2 / 6) < 1e-13
    assert abs(polygamma(2, 2 / 3) - polygamma(2, 1 / 3) - 8 * math.pi**3 / 3**1.5) < 1e-11
    assert abs(polygamma(3, 0.3) - 743.1417646550498) < 1e-11 * 743
    assert abs(polygamma(6, 2.5) - -1.318006107550035) < 1e-12
    with pytest.raises(ValueError):
        polygamma(7, 1.0)
    with pytest.raises(ValueError):
        polygamma(1, -0.5)


def test_tetragamma_quarter_sum_and_difference():
    # the reflection closed form belongs to the sum; the difference is 6 * 4^4 * L_-4(4)
    closed = 2 * math.pi**4 * (2 + math.cos(math.pi / 2)) / math.sin(math.pi / 4) ** 4
    assert abs(polygamma(3, 0.25) + polygamma(3, 0.75) - closed) < 1e-8 * closed
    n = np.arange(200000.0)
    series = 6 * math.fsum(1 / (n + 0.25) ** 4 - 1 / (n + 0.75) ** 4)
    assert abs(polygamma(3, 0.25) - polygamma(3, 0.75) - series) < 1e-9
    assert abs(series - 1536 * 0.9889445517411054) < 1e-9


@pytest.mark.parametrize("z", GRID)
def test_tetragamma_reflection_is_a_sum(z):
    rhs = 2 * math.pi**4 * (2 + math.cos(2 * math.pi * z)) / math.sin(math.pi * z) ** 4
    assert abs(polygamma(3, 1 - z) + polygamma(3, z) - rhs) < 1e-8 * math.pi**4


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("a", [0.25, 1 / 3, 0.7, 2.5])
def test_polygamma_matches_hurwitz(m, a):
    v = (-1) ** (m + 1) * math.factorial(m) * hurwitz_zeta(m + 1, a)
    assert abs(polygamma(m, a) - v) < 1e-11 * max(1, abs(v))


def test_log_gamma_examples():
    assert log_gamma(1.0) == 0.0
    assert abs(log_gamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-15
    assert abs(math.exp(log_gamma(0.25) + log_gamma(0.75)) - math.pi * math.sqrt(2)) < 1e-13
    assert abs(log_gamma(7.3) - 7.147892523022248) < 1e-12
    with pytest.raises(ValueError):
        log_gamma(-1.0)


@pytest.mark.parametrize("a, b, v", [(1, 0.5, math.pi), (2, 0, 1.0), (2, 0.5, math.pi / 2)])
def test_beta_integral_examples(a, b, v):
    assert abs(beta_integral(a, b) - v) < 1e-13
    with np.errstate(over="ignore"):
        q = de_quadrature(lambda t: 1 / ((1 + t) ** a * t**b), 0.0)
    assert abs(q.value - v) < 1e-11


def test_beta_integral_region():
    with pytest.raises(ValueError):
        beta_integral(0.5, 0.25)
    with pytest.raises(ValueError):
        beta_integral(2, 1.0)


@pytest.mark.parametrize("x, v", [(1.0, 0.42102443824070834), (5.0, 0.0036910983340425942), (0.1, 2.4270690247020164)])
def test_bessel_k0_values(x, v):
    assert abs(bessel_k0(x) - v) < 1e-14


def test_bessel_k0_large_and_domain():
    assert 0 < bessel_k0(40.0) < 1e-17
    with pytest.raises(ValueError):
        bessel_k0(0.0)


@pytest.mark.parametrize("c", [math.pi * math.sqrt(11), 1.7, 4.0])
def test_bessel_k0_integral_identity(c):
    q = de_quadrature(lambda y: np.exp(-c * (y + 1 / y) / 2) / y, 0.0)
    assert abs(2 * q.value - 4 * bessel_k0(c)) < 1e-10 * 4 * bessel_k0(c)


@pytest.mark.parametrize("x", [1.0, 2.0, 2.0000001, 3.0, 8.0])
def test_bessel_k0_cosh_integral(x):
    with np.errstate(over="ignore"):
        q = de_quadrature(lambda t: np.exp(-x * np.cosh(t)), 0.0, target_abs_err=1e-16)
    assert abs(q.value - bessel_k0(x)) < 1e-14


def test_dilog_values():
    assert abs(dilog(0.3 + 0.4j) - complex(0.2665968667427404, 0.4613628918191090)) < 1e-13
    assert abs(dilog(-2 + 1j) - complex(-1.4890920430306578, 0.5409310031985791)) < 1e-13
    assert abs(dilog(1.0) - math.pi**2 / 6) < 1e-14
    assert abs(dilog(cmath.exp(1j * math.pi / 3)) - complex(math.pi**2 / 36, 1.0149416064096536)) < 1e-13


def test_clausen_examples():
    assert abs(clausen2(0.0)) < 1e-15
    assert abs(clausen2(math.pi)) < 1e-14
    assert abs(clausen2(math.pi / 2) - G) < 1e-14
    assert abs(clausen2(1.0) - 1.0139591323607684) < 1e-13
    assert abs(clausen2(2.5) - 0.4335982032355328) < 1e-13
    assert abs(clausen2(2.5 + 4 * math.pi) - clausen2(2.5)) < 1e-12


@settings(max_examples=60)
@given(st.floats(0.01, math.pi / 2 - 0.01))
def test_clausen_duplication(t):
    assert abs(clausen2(2 * t) - 2 * clausen2(t) + 2 * clausen2(math.pi - t)) < 1e-11


def test_bloch_wigner_examples():
    z1 = complex(0.5, math.sqrt(23) / 2)
    assert bloch_wigner(0.5) == pytest.approx(0.0, abs=1e-15)
    assert abs(bloch_wigner(z1) - 0.7775342127097294) < 1e-12
    assert abs(bloch_wigner(z1.conjugate()) + bloch_wigner(z1)) < 1e-14
    assert abs(bloch_wigner(1j) - G) < 1e-14
    for bad in (0, 1):
        with pytest.raises(ValueError):
            bloch_wigner(bad)


cplx = st.complex_numbers(min_magnitude=0.05, max_magnitude=5, allow_nan=False, allow_infinity=False)


@settings(max_examples=80)
@given(cplx, cplx)
def test_bloch_wigner_five_term(x, y):
    pts = [x, y, (1 - x) / (1 - x * y) if abs(1 - x * y) > 0.05 else None]
    if pts[2] is None or min(abs(x - 1), abs(y - 1), abs(x * y - 1)) < 0.05:
        return
    args = [x, y, (1 - x) / (1 - x * y), 1 - x * y, (1 - y) / (1 - x * y)]
    if any(abs(z) < 1e-3 or abs(z - 1) < 1e-3 for z in args):
        return
    assert abs(sum(bloch_wigner(z) for z in args)) < 1e-9


def test_euler_numbers():
    assert euler_table(10) == (1, -1, 5, -61, 1385, -50521)
    assert euler_number(10) == -50521
    assert euler_number(7) == 0


def sech_partial(x, K):
    return 1.0 + math.fsum(euler_number(2 * k) * x ** (2 * k) / math.factorial(2 * k) for k in range(1, K + 1))


def test_sech_generating_function():
    # radius of convergence pi/2: the truncation error at x = 1 decays like (2/pi)^(2K)
    assert abs(sech_partial(1.0, 15) - 1 / math.cosh(1.0)) < 1e-6
    assert abs(sech_partial(1.0, 40) - 1 / math.cosh(1.0)) < 1e-12
    assert abs(sech_partial(0.3, 15) - 1 / math.cosh(0.3)) < 1e-15


def test_bernoulli_numbers():
    assert bernoulli(0) == 1 and bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert all(bernoulli(2 * j + 1) == 0 for j in range(1, 20))
    assert bernoulli_table(4)[:5] == (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30))


def test_catalan_routes():
    assert abs(catalan_series() - CATALAN) < 1e-15
    assert abs(CATALAN - G) < 1e-16


def test_bloch_wigner_subnormal_imaginary_part():
    z = complex(-4 / 3, -5e-324)
    assert bloch_wigner(z) == pytest.approx(0.0, abs=1e-15)
    assert abs(dilog(z) - dilog(-4 / 3)) < 1e-15
