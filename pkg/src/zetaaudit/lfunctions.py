"""Quadratic Dirichlet L-functions L_D(s) and the constants built from them.

Values come from three independent places: finite character sums of Hurwitz
zeta values, truncated Euler products with a rigorous tail bound, and the
functional equation applied to a value on the other side of s = 1/2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .characters import character_table, is_fundamental
from .numerics import cached_primes, compensated_sum, de_quadrature, divisor_sigma, pell_fundamental
from .special import EULER_GAMMA, bessel_k0, digamma, euler_number
from .stieltjes import stieltjes_gamma, stieltjes_gammas
from .zeta import debruijn_integral, hurwitz_zeta_regular, riemann_zeta, zeta_crit_strip

__all__ = [
    "ROUTES",
    "LValue",
    "l_value",
    "l_value_euler",
    "l_value_via_fe",
    "l_one_closed_form",
    "l_prime_1",
    "euler_kronecker",
    "beta_odd",
    "selberg_chowla_half",
    "SELBERG_CHOWLA_PRIMES",
    "selberg_chowla_series",
    "madelung_m2",
    "madelung_m2_stieltjes",
    "zeta_prime_half_routes",
]

ROUTES = ("hurwitz", "euler_product", "functional_eq", "closed_form")
SELBERG_CHOWLA_PRIMES = (11, 19, 43, 67)


@dataclass(frozen=True)
class LValue:
    D: int
    s: float
    value: float
    route: str
    err_estimate: float

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if not self.err_estimate >= 0:
            raise ValueError("err_estimate must be non-negative")

    def __float__(self) -> float:
        return self.value


def _check_D(D: int) -> int:
    D = int(D)
    if not is_fundamental(D):
        raise ValueError(f"D={D} is not a fundamental discriminant")
    return D


def l_value(D: int, s: float) -> LValue:
    """L_D(s) = |D|^-s sum_m chi(m) zeta(s, m/|D|) for real s (s != 1 when D = 1)."""
    D = _check_D(D)
    s = float(s)
    if D == 1:
        if s == 1.0:
            raise ValueError("zeta has a pole at s = 1")
        v = riemann_zeta(s)
        return LValue(D, s, v, "hurwitz", 1e-14 * max(1.0, abs(v)))
    table = character_table(D)
    k = table.modulus
    if s == 1.0:
        # L(1) = (1/k) sum chi(m) gamma_0(m/k), gamma_0 = -psi
        terms = [-c * digamma(m / k) / k for m, c in table.support()]
    else:
        # the 1/(s-1) parts cancel because the character sums to zero
        terms = [c * hurwitz_zeta_regular(s, m / k) for m, c in table.support()]
        terms = [t * k**-s for t in terms]
    v = compensated_sum(terms)
    err = 1e-15 * sum(abs(t) for t in terms) * len(terms) ** 0.5 + 1e-15 * abs(v)
    return LValue(D, s, v, "hurwitz", err)


def _euler_tail_bound(s: float, limit: int) -> float:
    # |ln of the omitted factors| <= sum_{n >= L} n^-s / (1 - L^-s)
    L = float(limit)
    return (L ** (1.0 - s) / (s - 1.0) + L**-s) / (1.0 - L**-s)


def l_value_euler(D: int, s: float, prime_limit: int = 10**7) -> LValue:
    """Truncated Euler product over p < prime_limit with a multiplicative tail bound."""
    D = _check_D(D)
    s = float(s)
    if not s > 1.0:
        raise ValueError("the Euler product needs s > 1")
    if prime_limit < 100:
        raise ValueError("prime_limit must be at least 100")
    p = cached_primes(int(prime_limit))
    table = character_table(D)
    chi = table.as_array()[(p - 1) % table.modulus].astype(float)
    logs = -np.log1p(-chi * np.power(p.astype(float), -s))
    log_value = compensated_sum(logs)
    value = math.exp(log_value)
    tail = _euler_tail_bound(s, prime_limit)
    return LValue(D, s, value, "euler_product", value * math.expm1(tail) + 1e-15 * value)


def _gamma_trig(s: float, odd: bool) -> float:
    """Gamma(s) * sin(pi s/2) for odd characters, Gamma(s) * cos(pi s/2) for even ones."""
    n = -s
    if s <= 0 and n == int(n):
        n = int(n)
        if odd and n % 2 == 0:
            m = n // 2
            return 0.5 * math.pi * (-1) ** m / math.factorial(2 * m)
        if not odd and n % 2 == 1:
            m = (n - 1) // 2
            return -0.5 * math.pi * (-1) ** m / math.factorial(2 * m + 1)
        kind = "sin" if odd else "cos"
        raise ValueError(f"Gamma has a pole at s={s:g} that {kind}(pi s/2) does not cancel")
    trig = math.sin(0.5 * math.pi * s) if odd else math.cos(0.5 * math.pi * s)
    return math.gamma(s) * trig


def l_value_via_fe(D: int, s: float) -> LValue:
    """L_D(1 - s) from L_D(s) through the functional equation.

    L(1-s) = 2 (2 pi)^-s k^(s-1/2) Gamma(s) sin(pi s/2) L(s)  for D < 0,
    with cos in place of sin for D > 0.
    """
    D = _check_D(D)
    s = float(s)
    k = abs(D)
    factor = _gamma_trig(s, odd=D < 0)
    if D == 1 and s == 1.0:
        raise ValueError("zeta(s) has a pole at s = 1")
    base = l_value(D, s)
    pre = 2.0 * (2.0 * math.pi) ** -s * k ** (s - 0.5) * factor
    v = pre * base.value
    err = abs(pre) * base.err_estimate + 1e-14 * abs(v)
    return LValue(D, 1.0 - s, v, "functional_eq", err)


def l_one_closed_form(D: int, h: int | None = None) -> LValue:
    """L_D(1) from the class number formula: pi/(3 sqrt 3), pi/4, pi h/sqrt|D|, 2 h ln(eps)/sqrt D."""
    D = _check_D(D)
    if D == 1:
        raise ValueError("zeta has a pole at s = 1")
    if D == -3:
        v = math.pi / (3.0 * math.sqrt(3.0))
    elif D == -4:
        v = math.pi / 4.0
    else:
        if h is None:
            if D > 0:
                raise ValueError("real quadratic fields need the class number supplied")
            from .characters import class_number

            h = class_number(D).h
        if D < 0:
            v = math.pi * h / math.sqrt(-D)
        else:
            v = 2.0 * h * pell_fundamental(D).log_value / math.sqrt(D)
    return LValue(D, 1.0, v, "closed_form", 4e-16 * abs(v))


def l_prime_1(D: int) -> float:
    """L_D'(1) = -ln|D| L_D(1) - |D|^-1 sum_m chi(m) gamma_1(m/|D|)."""
    D = _check_D(D)
    if D == 1:
        raise ValueError("L'(1) is not defined for the trivial character")
    table = character_table(D)
    k = table.modulus
    g1 = compensated_sum(c * stieltjes_gamma(1, m / k)[0] for m, c in table.support())
    return -math.log(k) * l_value(D, 1.0).value - g1 / k


def euler_kronecker(D: int) -> float:
    """gamma + L_D'(1) / L_D(1), the Euler-Kronecker constant of Q(sqrt D)."""
    D = _check_D(D)
    return EULER_GAMMA + l_prime_1(D) / l_value(D, 1.0).value


def beta_odd(k: int) -> float:
    """L_{-4}(2k+1) = (-1)^k E_2k (pi/2)^(2k+1) / (2 (2k)!)."""
    if not 0 <= k <= 10:
        raise ValueError("beta_odd supports 0 <= k <= 10")
    return (-1) ** k * euler_number(2 * k) * (0.5 * math.pi) ** (2 * k + 1) / (2.0 * math.factorial(2 * k))


def selberg_chowla_series(p: int, divisor_power: int = 0) -> tuple[float, int]:
    """sum_n (-1)^n sigma_r(n) K0(n pi sqrt p), stopped once a term drops below 1e-16.

    Returns the sum and the number of terms used. The identity below holds
    with the divisor count r = 0; r = 1 (sum of divisors) leaves a residual
    of about 4 K0(2 pi sqrt p).
    """
    terms = []
    n = 1
    while True:
        t = (-1) ** n * float(divisor_sigma(divisor_power, n)) * bessel_k0(math.sqrt(p) * n * math.pi)
        terms.append(t)
        if abs(t) < 1e-16:
            break
        n += 1
    return compensated_sum(terms), n


def selberg_chowla_half(p: int, divisor_power: int = 0) -> tuple[float, float]:
    """Both sides of zeta(1/2) L_{-p}(1/2) = gamma + ln(sqrt p / 8 pi) + 4 sum (-1)^n d(n) K0(n pi sqrt p).

    Only meaningful for the primes p = 3 mod 4 with class number one;
    other p draw a warning but are evaluated anyway.
    """
    p = int(p)
    if p not in SELBERG_CHOWLA_PRIMES:
        warnings.warn(f"p={p} is outside {SELBERG_CHOWLA_PRIMES}; evaluating anyway", stacklevel=2)
    if not is_fundamental(-p):
        raise ValueError(f"-{p} is not a fundamental discriminant")
    lhs = zeta_crit_strip(0.5) * l_value(-p, 0.5).value
    series, _ = selberg_chowla_series(p, divisor_power)
    rhs = EULER_GAMMA + math.log(math.sqrt(p) / (8.0 * math.pi)) + 4.0 * series
    return lhs, rhs


def madelung_m2() -> float:
    """M_2 = 4 (sqrt 2 - 1) zeta(1/2) L_{-4}(1/2)."""
    return 4.0 * (math.sqrt(2.0) - 1.0) * zeta_crit_strip(0.5) * l_value(-4, 0.5).value


def madelung_m2_stieltjes(n_terms: int = 40) -> float:
    """M_2 with L_{-4}(1/2) from sum_n 2^-n/n! [gamma_n(1/4) - gamma_n(3/4)]."""
    g14, _ = stieltjes_gammas(n_terms, 0.25)
    g34, _ = stieltjes_gammas(n_terms, 0.75)
    series = compensated_sum((g14[n] - g34[n]) / (2.0**n * math.factorial(n)) for n in range(n_terms + 1))
    return 2.0 * (math.sqrt(2.0) - 1.0) * zeta_crit_strip(0.5) * series


def zeta_prime_half_routes(n_terms: int = 40) -> tuple[float, float, float]:
    """Three expressions that each equal -4 - zeta'(1/2).

    (1/pi) times the ln-weighted integral of ln(1+t) - psi(1+t) against t^-1/2;
    sum_n gamma_{n+1} / (2^n n!);  -2 Re i times the integral of
    ln(1 - iy) (1 - iy)^-1/2 / (e^{2 pi y} - 1) over y > 0.
    """
    weighted = float(debruijn_integral(0.5, log_weight=True).value) / math.pi
    g, _ = stieltjes_gammas(n_terms + 1, 1.0)
    series = compensated_sum(g[n + 1] / (2.0**n * math.factorial(n)) for n in range(n_terms + 1))

    def f(y):
        z = 1.0 - 1j * y
        return (1j * np.log(z) / (np.sqrt(z) * np.expm1(2.0 * math.pi * y))).real

    quad = -2.0 * float(de_quadrature(f, 0.0, 10.0, target_abs_err=1e-14).value)
    return weighted, series, quad
