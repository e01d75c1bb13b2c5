"""Real special functions: digamma/polygamma, gamma helpers, Beta integral,
Euler and Bernoulli numbers, Bessel K0, dilogarithm, Clausen, Bloch-Wigner."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
import threading
from math import comb

import numpy as np

__all__ = [
    "EULER_GAMMA",
    "CATALAN",
    "alternating_sum",
    "catalan_series",
    "bernoulli",
    "bernoulli_table",
    "euler_number",
    "euler_table",
    "digamma",
    "polygamma",
    "log_minus_digamma",
    "log_gamma",
    "beta_integral",
    "bessel_k0",
    "dilog",
    "clausen2",
    "bloch_wigner",
]

EULER_GAMMA = 0.57721566490153286060651209008240243
# Only used as a documented constant; tests compute G independently.
CATALAN = 0.91596559417721901505460351493238411

MAX_EULER_INDEX = 400
MAX_BERNOULLI_INDEX = 400


# ------------------------------------------------------- number tables ----

_BERNOULLI: list[Fraction] = [Fraction(1)]
_EULER_EVEN: list[int] = [1]
_TABLE_LOCK = threading.Lock()


def _bernoulli_list(n_max: int) -> list[Fraction]:
    with _TABLE_LOCK:
        B = _BERNOULLI
        for m in range(len(B), n_max + 1):
            B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    return B


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if not 0 <= n <= MAX_BERNOULLI_INDEX:
        raise ValueError(f"Bernoulli index {n} out of range")
    return _bernoulli_list(n)[n]


def bernoulli_table(two_j: int) -> tuple[Fraction, ...]:
    """B_0 .. B_{2j}."""
    if two_j % 2 or not 0 <= two_j <= MAX_BERNOULLI_INDEX:
        raise ValueError("need an even index within range")
    return tuple(_bernoulli_list(two_j)[: two_j + 1])


def _euler_even(k_max: int) -> list[int]:
    # sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 for n >= 1 (sech generating function)
    with _TABLE_LOCK:
        E = _EULER_EVEN
        for n in range(len(E), k_max + 1):
            E.append(-sum(comb(2 * n, 2 * k) * E[k] for k in range(n)))
    return E


def euler_number(n: int) -> int:
    """Euler number E_n (zero for odd n)."""
    if not 0 <= n <= MAX_EULER_INDEX:
        raise ValueError(f"Euler index {n} out of range")
    if n % 2:
        return 0
    return _euler_even(n // 2)[n // 2]


def euler_table(two_k: int) -> tuple[int, ...]:
    """E_0, E_2, ..., E_{2k}."""
    if two_k % 2 or not 0 <= two_k <= MAX_EULER_INDEX:
        raise ValueError("need an even index within range")
    return tuple(_euler_even(two_k // 2)[: two_k // 2 + 1])


# Bernoulli weights as floats for the asymptotic series below
_B2J = [float(bernoulli(2 * j)) for j in range(0, 30)]


# ------------------------------------------------------ gamma family -------

_SHIFT = 10.0


def digamma(x: float) -> float:
    """psi(x) for x > 0: shift to x >= 10, then the Stirling series."""
    x = float(x)
    if not x > 0:
        raise ValueError("digamma is only provided for x > 0")
    acc = []
    while x < _SHIFT:
        acc.append(-1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = inv2
    for j in range(1, 12):
        series += _B2J[j] / (2 * j) * p
        p *= inv2
    acc.extend((math.log(x), -0.5 / x, -series))
    return math.fsum(acc)


def log_minus_digamma(x: float | np.ndarray):
    """ln(x) - psi(x), accurate for large x where both terms nearly cancel."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("log_minus_digamma needs x > 0")
    out = np.zeros_like(x)
    y = x.copy()
    # ln x - psi(x) = [ln y - psi(y)] - ln(y/x) + sum_{i<n} 1/(x+i),  y = x + n
    small = y < _SHIFT
    corr = np.zeros_like(x)
    if np.any(small):
        n = np.where(small, np.ceil(_SHIFT - x), 0.0)
        y = x + n
        for i in range(int(n.max())):
            corr += np.where(i < n, 1.0 / (x + i), 0.0)
        corr -= np.log(y / x)
    inv = 1.0 / y
    inv2 = inv * inv
    series = 0.5 * inv
    p = inv2
    for j in range(1, 12):
        series = series + _B2J[j] / (2 * j) * p
        p = p * inv2
    out = series + corr
    return out if out.ndim else float(out)


def polygamma(m: int, x: float) -> float:
    """psi^{(m)}(x) for 1 <= m <= 6 and x > 0."""
    if not (isinstance(m, (int, np.integer)) and 1 <= m <= 6):
        raise ValueError("polygamma supports 1 <= m <= 6")
    x = float(x)
    if not x > 0:
        raise ValueError("polygamma is only provided for x > 0")
    sign = 1.0 if m % 2 else -1.0  # (-1)^(m+1)
    fm = math.factorial(m)
    acc = []
    shift = 2.0 * _SHIFT
    while x < shift:
        # psi^(m)(x) = psi^(m)(x+1) - (-1)^m m! / x^(m+1)
        acc.append(sign * fm / x ** (m + 1))
        x += 1.0
    terms = [math.factorial(m - 1) / x**m, fm / (2.0 * x ** (m + 1))]
    for j in range(1, 14):
        terms.append(
            _B2J[j] * math.factorial(2 * j + m - 1) / math.factorial(2 * j) / x ** (2 * j + m)
        )
    acc.append(sign * math.fsum(terms))
    return math.fsum(acc)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0:
        raise ValueError("log_gamma is only provided for x > 0")
    return math.lgamma(x)


def beta_integral(a: float, b: float) -> float:
    """Closed form of the integral of dt / ((1+t)^a t^b) over (0, inf)."""
    if not (a + b > 1 and b < 1):
        raise ValueError("need a + b > 1 and b < 1")
    return math.exp(math.lgamma(1 - b) + math.lgamma(a + b - 1) - math.lgamma(a))


# --------------------------------------------------------------- Bessel ----

def bessel_k0(x: float) -> float:
    """Modified Bessel function K_0(x), x > 0.

    Power series for x <= 2; Steed/Temme continued fraction beyond.
    """
    x = float(x)
    if not x > 0:
        raise ValueError("bessel_k0 needs x > 0")
    if x <= 2.0:
        q = 0.25 * x * x
        term = 1.0
        harmonic = 0.0
        i0 = [1.0]
        rest = [0.0]
        k = 0
        while True:
            k += 1
            term *= q / (k * k)
            harmonic += 1.0 / k
            i0.append(term)
            rest.append(term * harmonic)
            if term < 1e-18:
                break
        return -(math.log(0.5 * x) + EULER_GAMMA) * math.fsum(i0) + math.fsum(rest)
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(1, 10000):
        a -= 2 * i
        c = -a * c / (i + 1.0)
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-17:
            break
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s


# ----------------------------------------------------------- dilogarithm ----

_PI2_6 = math.pi**2 / 6.0
_LI2_COEF = [float(bernoulli(n)) / math.factorial(n + 1) for n in range(0, 40)]


def _li2_bernoulli(z: complex) -> complex:
    # Li2(z) = sum_n B_n u^(n+1)/(n+1)!, u = -ln(1-z); fast for |z|<=1, Re z<=1/2
    u = -cmath.log(1.0 - z)
    u2 = u * u
    total = _LI2_COEF[0] * u + _LI2_COEF[1] * u2
    p = u * u2  # u^3
    for n in range(2, 40, 2):
        t = _LI2_COEF[n] * p
        total += t
        if abs(t) < 1e-18 * abs(total):
            break
        p *= u2
    return total


def dilog(z: complex) -> complex:
    """Principal branch Li_2(z)."""
    z = complex(z)
    if z == 0:
        return 0j
    if z == 1:
        return complex(_PI2_6)
    if abs(z) > 1.0:
        # inversion: Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2
        # +0.0 clears a signed zero so the real axis maps to one side of the cut
        minus_z = complex(-z.real, -z.imag + 0.0)
        # conj(z)/|z|^2 avoids the overflow of complex division on subnormal parts
        inv = z.conjugate() / (abs(z) ** 2)
        return -dilog(inv) - _PI2_6 - 0.5 * cmath.log(minus_z) ** 2
    if z.real > 0.5:
        # reflection: Li2(z) = -Li2(1-z) + pi^2/6 - ln z ln(1-z)
        return -_li2_bernoulli(1.0 - z) + _PI2_6 - cmath.log(z) * cmath.log(1.0 - z)
    return _li2_bernoulli(z)


def clausen2(theta: float) -> float:
    """Cl_2(theta) = Im Li_2(exp(i theta))."""
    t = math.remainder(float(theta), 2.0 * math.pi)
    if t == 0.0 or abs(t) == math.pi:
        return 0.0
    sign = 1.0 if t > 0 else -1.0
    t = abs(t)
    z = cmath.exp(1j * t)
    if t < math.pi / 3:
        # 1 - z is small here; ln z = i t exactly
        one_minus = complex(2.0 * math.sin(0.5 * t) ** 2, -math.sin(t))
        val = -_li2_bernoulli(one_minus) + _PI2_6 - 1j * t * cmath.log(one_minus)
    else:
        val = _li2_bernoulli(z)
    return sign * val.imag


def _arg(w: complex) -> float:
    # cmath.phase raises when the angle underflows; atan2 returns it
    return math.atan2(w.imag, w.real)


def bloch_wigner(z: complex) -> float:
    """D(z) = Im Li_2(z) + arg(1 - z) ln|z|."""
    z = complex(z)
    if z == 0 or z == 1:
        raise ValueError("Bloch-Wigner dilogarithm is undefined at 0 and 1")
    return dilog(z).imag + _arg(1.0 - z) * math.log(abs(z))


def alternating_sum(a, n: int = 40) -> float:
    """sum_{k>=0} (-1)^k a(k) by Cohen-Villegas-Zagier acceleration.

    For totally monotone a(k) the error is about 5.8^-n relative.
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b, c, total = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        total += c * a(k)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return total / d


def catalan_series(n: int = 40) -> float:
    """Catalan's constant from sum (-1)^k / (2k+1)^2, accelerated."""
    return alternating_sum(lambda k: 1.0 / (2 * k + 1) ** 2, n)
