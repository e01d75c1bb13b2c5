"""Hurwitz zeta by Euler-Maclaurin, zeta(s) on (0, 1) by quadrature, and
Epstein zeta functions of positive-definite binary quadratic forms."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numerics import de_quadrature, divisor_sigma
from .special import bernoulli, beta_integral, log_minus_digamma

__all__ = [
    "HurwitzParams",
    "hurwitz_params",
    "hurwitz_zeta",
    "hurwitz_zeta_regular",
    "hurwitz_zeta_ds",
    "hurwitz_zeta_ds_regular",
    "riemann_zeta",
    "zeta_crit_strip",
    "CritStripBounds",
    "crit_strip_bounds",
    "QuadForm",
    "epstein_partial_zeta",
    "epstein_exponential_series",
]

_EM_COEF = [float(bernoulli(2 * j)) / math.factorial(2 * j) for j in range(0, 16)]
_EM_TOL = 1e-14


@dataclass(frozen=True)
class HurwitzParams:
    s: float
    a: float
    N: int
    J: int
    remainder: float

    def __post_init__(self):
        if self.s == 1:
            raise ValueError("s = 1 is the pole")
        if not self.a > 0:
            raise ValueError("need a > 0")


def _rising(s: float, n: int) -> tuple[float, float]:
    """s(s+1)...(s+n-1) and its derivative in s."""
    p, dp = 1.0, 0.0
    for i in range(n):
        p, dp = p * (s + i), dp * (s + i) + p
    return p, dp


def _em_term(s: float, x: float, j: int) -> float:
    return _EM_COEF[j] * _rising(s, 2 * j - 1)[0] * x ** (-s - 2 * j + 1)


def _em_term_ds(s: float, x: float, j: int) -> float:
    p, dp = _rising(s, 2 * j - 1)
    return _EM_COEF[j] * (dp - math.log(x) * p) * x ** (-s - 2 * j + 1)


def _choose(s: float, a: float, deriv: bool = False) -> tuple[int, int, float]:
    """Cutoff N and order J such that the next E-M term is negligible."""
    if s >= 0:
        J = 8
        N = max(math.ceil(abs(s)) + 10, math.ceil(10.0 / a))
        while True:
            x = N + a
            rem = abs(_em_term(s, x, J + 1))
            scale = max(abs(x ** (1 - s) / (s - 1)) if s != 1 else 1.0, a**-s)
            if rem < _EM_TOL * min(1.0, scale) or N > 10**7:
                return N, J, rem
            N *= 2
    # negative s: the head sum grows with N while the E-M terms shrink, so
    # pick (N, J) minimizing rounding noise plus truncation remainder
    best = None
    for N in range(0, 41):
        x = N + a
        if x < 1.0:
            continue
        terms = _em_terms_abs(s, x, 15, deriv)
        head = x ** (1 - s) / (1 - s)
        for J in (8, 10, 12, 14):
            size = max(head, max(terms[:J]))
            cost = 1e-16 * size * (1.0 + abs(math.log(x)) if deriv else 1.0) + terms[J]
            if best is None or cost < best[0]:
                best = (cost, N, J, terms[J])
    return best[1], best[2], best[3]


def _em_terms_abs(s: float, x: float, count: int, deriv: bool) -> list[float]:
    """|E-M term j| for j = 1..count (with the s-derivative folded in if asked)."""
    out = []
    L = math.log(x)
    p, dp = s, 1.0  # rising factorial s(s+1)..(s+2j-2) and its s-derivative
    xp = x**-s
    for j in range(1, count + 1):
        v = abs(_EM_COEF[j] * p * xp)
        if deriv:
            v = max(v, abs(_EM_COEF[j] * (dp - L * p) * xp))
        out.append(v)
        a1, a2 = s + 2 * j - 1, s + 2 * j
        p, dp = p * a1 * a2, dp * a1 * a2 + p * (a1 + a2)
        xp /= x * x
    return out


def hurwitz_params(s: float, a: float) -> HurwitzParams:
    s, a = float(s), float(a)
    if not a > 0:
        raise ValueError("need a > 0")
    N, J, rem = _choose(s, a)
    return HurwitzParams(s, a, N, J, rem)


def _check(s, a) -> tuple[float, float]:
    if isinstance(a, Fraction):
        a = float(a)
    s, a = float(s), float(a)
    if not a > 0:
        raise ValueError(f"Hurwitz zeta needs a > 0, got {a}")
    if not math.isfinite(s):
        raise ValueError("s must be finite")
    return s, a


def _head(s: float, a: float, N: int, weight_log: bool = False) -> float:
    if N == 0:
        return 0.0
    base = np.arange(N, dtype=float) + a
    terms = base**-s
    if weight_log:
        terms = -np.log(base) * terms
    return math.fsum(terms.tolist())


def _pole_tail(delta: float, L: float) -> float:
    """(x^(-delta) - 1)/delta with L = ln x; equals -L at delta = 0."""
    if delta == 0.0:
        return -L
    return math.expm1(-delta * L) / delta


def _pole_tail_ds(delta: float, L: float) -> float:
    """d/ds [x^(-delta)/delta] + 1/delta^2, smooth through delta = 0."""
    t = delta * L
    if abs(t) < 0.5:
        # L^2 * sum_{n>=2} (-1)^n (n-1) t^(n-2) / n!
        total, term_pow, fact = 0.0, 1.0, 2.0
        for n in range(2, 40):
            c = (n - 1) * term_pow / fact
            total += c if n % 2 == 0 else -c
            term_pow *= t
            fact *= n + 1
        return L * L * total
    e = math.exp(-t)
    return (1.0 - e) / (delta * delta) - L * e / delta


def hurwitz_zeta_regular(s: float, a: float) -> float:
    """zeta(s, a) - 1/(s - 1); finite at s = 1, where it equals -psi(a)."""
    s, a = _check(s, a)
    N, J, _ = _choose(s, a)
    x = N + a
    L = math.log(x)
    parts = [_head(s, a, N), _pole_tail(s - 1.0, L), 0.5 * x**-s]
    for j in range(1, J + 1):
        parts.append(_em_term(s, x, j))
    return math.fsum(parts)


def hurwitz_zeta(s: float, a: float) -> float:
    """zeta(s, a) for real s != 1 and a > 0."""
    s, a = _check(s, a)
    if s == 1.0:
        raise ValueError("zeta(s, a) has a pole at s = 1")
    N, J, _ = _choose(s, a)
    x = N + a
    parts = [_head(s, a, N), x ** (1.0 - s) / (s - 1.0), 0.5 * x**-s]
    for j in range(1, J + 1):
        parts.append(_em_term(s, x, j))
    return math.fsum(parts)


def hurwitz_zeta_ds_regular(s: float, a: float) -> float:
    """d/ds zeta(s, a) + 1/(s - 1)^2; equals -gamma_1(a) at s = 1."""
    s, a = _check(s, a)
    N, J, _ = _choose(s, a, deriv=True)
    x = N + a
    L = math.log(x)
    xs = x**-s
    parts = [_head(s, a, N, weight_log=True), _pole_tail_ds(s - 1.0, L), -0.5 * L * xs]
    for j in range(1, J + 1):
        parts.append(_em_term_ds(s, x, j))
    return math.fsum(parts)


def hurwitz_zeta_ds(s: float, a: float) -> float:
    """Partial derivative of zeta(s, a) in s, by differentiated Euler-Maclaurin."""
    s, a = _check(s, a)
    if s == 1.0:
        raise ValueError("zeta'(s, a) has a pole at s = 1")
    return hurwitz_zeta_ds_regular(s, a) - 1.0 / (s - 1.0) ** 2


def riemann_zeta(s: float) -> float:
    return hurwitz_zeta(s, 1.0)


# ----------------------------------------------------- critical strip ----

def _debruijn_integrand(s: float, log_weight: bool = False):
    def f(t):
        v = log_minus_digamma(1.0 + t) * t**-s
        return v * np.log(t) if log_weight else v

    return f


def debruijn_integral(s: float, log_weight: bool = False, target: float = 1e-13):
    """Integral of [ln(1+t) - psi(1+t)] t^(-s) (times ln t if requested) over (0, inf)."""
    return de_quadrature(_debruijn_integrand(s, log_weight), 0.0, math.inf, target_abs_err=target)


def zeta_crit_strip(s: float) -> float:
    """zeta(s) for 0 < s < 1 from its integral representation over ln - digamma."""
    s = float(s)
    if not 0.0 < s < 1.0:
        raise ValueError("zeta_crit_strip needs 0 < s < 1")
    res = debruijn_integral(s)
    return 1.0 / (s - 1.0) + math.sin(math.pi * s) / math.pi * float(res.value)


@dataclass(frozen=True)
class CritStripBounds:
    """Bounds for zeta(s), 0 < s < 1, from two-sided estimates of ln x - psi(x).

    ``*_integral`` are the normalised integrals (sin(pi s)/pi times the
    integral); ``*_quad`` are the same values obtained by direct quadrature
    of the bounding integrands.
    """

    s: float
    value: float
    crude_lower: float
    crude_upper: float
    lower_integral: float
    upper_integral: float
    lower_quad: float
    upper_quad: float
    lower: float
    upper: float

    @property
    def holds(self) -> bool:
        return self.lower < self.value < self.upper


def crit_strip_bounds(s: float) -> CritStripBounds:
    s = float(s)
    if not 0.0 < s < 1.0:
        raise ValueError("need 0 < s < 1")
    norm = math.sin(math.pi * s) / math.pi
    # t^(-s)/(t+c)^2 integrates to c^(-1-s) B(1-s, 1+s); B(1-s, s) for 1/(1+t)
    b1 = beta_integral(1.0, s)
    b2 = beta_integral(2.0, s)
    lower_i = 0.5 * norm * (b1 + (1.25) ** (-1.0 - s) * b2 / 6.0)
    upper_i = 0.5 * norm * (b1 + b2 / 6.0)

    def lower_f(t):
        return 0.5 * t**-s * (1.0 / (1.0 + t) + 1.0 / (6.0 * (t + 1.25) ** 2))

    def upper_f(t):
        return 0.5 * t**-s * (1.0 / (1.0 + t) + 1.0 / (6.0 * (t + 1.0) ** 2))

    lq = norm * float(de_quadrature(lower_f, 0.0, math.inf, target_abs_err=1e-14).value)
    uq = norm * float(de_quadrature(upper_f, 0.0, math.inf, target_abs_err=1e-14).value)
    pole = 1.0 / (s - 1.0)
    return CritStripBounds(
        s=s,
        value=zeta_crit_strip(s),
        crude_lower=pole + 0.5,
        crude_upper=pole + 1.0,
        lower_integral=lower_i,
        upper_integral=upper_i,
        lower_quad=lq,
        upper_quad=uq,
        lower=pole + lower_i,
        upper=pole + upper_i,
    )


# ------------------------------------------------------------- Epstein ----

@dataclass(frozen=True)
class QuadForm:
    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.A <= 0 or self.discriminant >= 0:
            raise ValueError(f"form {self} is not positive definite")

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    @property
    def lambda_min(self) -> float:
        return 0.5 * ((self.A + self.C) - math.hypot(self.A - self.C, self.B))

    @property
    def root(self) -> complex:
        """Upper half-plane root (-B + sqrt d) / 2A of A z^2 + B z + C."""
        return complex(-self.B, math.sqrt(-self.discriminant)) / (2 * self.A)

    def __call__(self, m, n):
        return self.A * m * m + self.B * m * n + self.C * n * n


def _epstein_rows(form: QuadForm, s: float, radius: int, fold: bool):
    n = np.arange(-radius, radius + 1, dtype=float)
    rows = range(0, radius + 1) if fold else range(-radius, radius + 1)
    for m in rows:
        if fold and m == 0:
            nn = n[radius + 1 :]  # n > 0 on the m = 0 row
        elif m == 0:
            nn = np.concatenate((n[:radius], n[radius + 1 :]))
        else:
            nn = n
        q = form.A * m * m + form.B * m * nn + form.C * nn * nn
        yield (q**-s).tolist()


def epstein_partial_zeta(
    form: QuadForm, s: float, radius: int, weight: float = 0.5, fold: bool = False
) -> tuple[float, float]:
    """Truncated weight * sum' Q(m, n)^(-s) over max(|m|, |n|) <= radius.

    Returns (value, tail_bound). The default weight 1/2 matches partial zeta
    functions of a class with two units. ``fold=True`` sums the half plane and
    doubles it, which gives the identical result.
    """
    s = float(s)
    radius = int(radius)
    if s <= 1.0:
        raise ValueError("Epstein sum needs s > 1")
    if radius < 2:
        raise ValueError("radius must be >= 2")
    total = math.fsum(itertools.chain.from_iterable(_epstein_rows(form, s, radius, fold)))
    if fold:
        total *= 2.0
    # points outside the square have |v| > R; compare with an annulus integral
    r0 = radius - math.sqrt(0.5)
    inflate = (1.0 + 1.0 / (math.sqrt(2.0) * radius)) ** (2 * s)
    tail = inflate * 2.0 * math.pi * r0 ** (2 - 2 * s) / (2 * s - 2) * form.lambda_min**-s
    return weight * total, weight * tail


def epstein_exponential_series(
    form: QuadForm,
    weight: float = 0.5,
    exponent: float | None = None,
    alternating: bool = True,
    common_bracket: bool = False,
    n_terms: int = 60,
) -> float:
    """weight * sum' Q(m, n)^(-2) via its Fourier (Chowla-Selberg) expansion.

    The expansion is

        2 zeta(4)/A^2 + 16 pi A |d|^(-3/2) [zeta(3)/2
            + sum_N sigma_{-3}(N) (1 + pi N r) exp(-pi N r) cos(pi N B / A)]

    with r = sqrt|d|/A. ``exponent`` overrides r inside the exponential only,
    ``alternating=False`` drops the cosine and ``common_bracket=True`` uses r
    and the cosine of the principal form (A = 1, B = 1) whatever A is; these
    switches reproduce alternative printed versions of the formula.
    """
    d = -form.discriminant
    A = form.A
    r = math.sqrt(d) / (1 if common_bracket else A)
    rexp = r if exponent is None else exponent
    ratio = 1.0 if common_bracket else form.B / A
    series = []
    for N in range(1, n_terms + 1):
        term = float(divisor_sigma(-3, N)) * (1.0 + math.pi * N * r) * math.exp(-math.pi * N * rexp)
        if alternating:
            term *= math.cos(math.pi * N * ratio)
        series.append(term)
        if abs(term) < 1e-300:
            break
    zeta3 = hurwitz_zeta(3.0, 1.0)
    zeta4 = hurwitz_zeta(4.0, 1.0)
    bracket = math.fsum([0.5 * zeta3] + series)
    return weight * (2.0 * zeta4 / A**2 + 16.0 * math.pi * A / d**1.5 * bracket)
