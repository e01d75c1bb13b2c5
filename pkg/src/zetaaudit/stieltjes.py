"""Generalized Stieltjes constants gamma_k(a) and the summatory series built on them.

Two independent routes are provided. ``stieltjes_gamma`` integrates a
rapidly decaying complex-logarithm integrand (all k share one quadrature),
``stieltjes_oracle`` evaluates the limit definition with an Euler-Maclaurin
tail. ``summatory_eval`` compares the Laurent series
sum_n (-x)^n gamma_n(a) / n! against its closed form zeta(1+x, a) - 1/x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .numerics import de_quadrature
from .special import bernoulli, digamma
from .zeta import hurwitz_zeta_regular

__all__ = [
    "MAX_K",
    "LaurentCoefficients",
    "laurent_coefficients",
    "stieltjes_gamma",
    "stieltjes_gammas",
    "StieltjesInstability",
    "stieltjes_oracle",
    "SummatorySpec",
    "SummatoryResult",
    "summatory_eval",
    "convergence_profile",
    "summatory",
]

# Highest index served by the integral route. Summatory series at |x| ~ 8
# need about fifty terms before factorial damping wins.
MAX_K = 64
ORACLE_MAX_K = 12
_Y_CUT = 10.0  # 1/(e^{2 pi y} - 1) < 1e-27 beyond this


def _as_float(a) -> float:
    a = float(a)
    if not a > 0 or not math.isfinite(a):
        raise ValueError(f"need a finite a > 0, got {a}")
    return a


def _integrand_factory(a: float, kmax: int):
    ks = np.arange(kmax + 1)

    def f(y):
        z = a - 1j * y
        # a > 0 keeps a - iy in the right half-plane: principal log never crosses its cut
        assert np.all(z.real > 0)
        L = np.log(z)
        powers = np.cumprod(np.concatenate([np.ones((len(y), 1)), np.repeat(L[:, None], kmax, 1)], 1), 1)
        weight = (y / a - 1j) / ((1.0 + (y / a) ** 2) * np.expm1(2.0 * np.pi * y))
        return (weight[:, None] * powers).real

    return f, ks


@lru_cache(maxsize=256)
def _gamma_batch(a: float, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    f, ks = _integrand_factory(a, kmax)
    pieces = [(0.0, min(a, _Y_CUT))]
    if a < _Y_CUT:
        pieces.append((a, _Y_CUT))
    total = np.zeros(kmax + 1)
    err = np.zeros(kmax + 1)
    for lo, hi in pieces:
        r = de_quadrature(f, lo, hi, target_abs_err=1e-15, target_rel_err=2e-11)
        total += r.value
        err += r.component_errors
    # what is left beyond the cut: the integrand decays like e^{-2 pi y}
    tail = np.abs(f(np.array([_Y_CUT]))[0]) / (2.0 * math.pi)
    la = math.log(a)
    boundary = np.array([la**k / (2.0 * a) - la ** (k + 1) / (k + 1) for k in ks])
    value = boundary + 2.0 / a * total
    scale = np.maximum(np.abs(value), 1.0)
    error = 2.0 / a * (err + tail) + 4e-16 * scale * (1 + ks)
    value.setflags(write=False)
    error.setflags(write=False)
    return value, error


def _check_k(k: int, limit: int) -> int:
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise TypeError("k must be an integer")
    if not 0 <= k <= limit:
        raise ValueError(f"k={k} outside 0..{limit}")
    return int(k)


def stieltjes_gammas(kmax: int, a) -> tuple[np.ndarray, np.ndarray]:
    """gamma_0(a) .. gamma_kmax(a) and their error estimates from one quadrature."""
    kmax = _check_k(kmax, MAX_K)
    a = _as_float(a)
    # one shared batch per a: smaller requests are sliced out of it
    value, error = _gamma_batch(a, MAX_K if kmax > 24 else 24)
    return value[: kmax + 1].copy(), error[: kmax + 1].copy()


def stieltjes_gamma(k: int, a) -> tuple[float, float]:
    """(gamma_k(a), error estimate) from the integral representation."""
    k = _check_k(k, MAX_K)
    v, e = stieltjes_gammas(k, a)
    return float(v[k]), float(e[k])


@dataclass(frozen=True)
class LaurentCoefficients:
    a: Fraction
    gammas: tuple[tuple[int, float, float], ...]

    def __post_init__(self):
        if self.gammas and self.gammas[0][0] == 0:
            g0 = self.gammas[0][1]
            if abs(g0 + digamma(float(self.a))) > 1e-10:
                raise ArithmeticError(f"gamma_0({self.a}) disagrees with -psi")


def laurent_coefficients(a, n: int) -> LaurentCoefficients:
    """The first n+1 Stieltjes constants at a rational a."""
    a = Fraction(a)
    v, e = stieltjes_gammas(n, float(a))
    return LaurentCoefficients(a, tuple((k, float(v[k]), float(e[k])) for k in range(n + 1)))


# ------------------------------------------------------------- oracle ----

class StieltjesInstability(ArithmeticError):
    """Successive oracle estimates failed to settle."""

    def __init__(self, message: str, estimates):
        super().__init__(message)
        self.estimates = estimates


def _poly_derivative(c: list[float], m: int) -> tuple[list[float], int]:
    # d/dx [x^{-m} P(L)] = x^{-m-1} [P'(L) - m P(L)],  L = ln x
    out = [-m * ci for ci in c] + [0.0]
    for i in range(1, len(c)):
        out[i - 1] += i * c[i]
    while len(out) > 1 and out[-1] == 0.0:
        out.pop()
    return out, m + 1


def _oracle_once(k: int, a: float, M: int, J: int = 20) -> tuple[float, float]:
    terms = [math.log(j + a) ** k / (j + a) for j in range(M)]
    X = M + a
    L = math.log(X)
    terms.append(-(L ** (k + 1)) / (k + 1))
    terms.append(0.5 * L**k / X)
    c, m = [0.0] * k + [1.0], 1
    for r in range(1, 2 * J):
        c, m = _poly_derivative(c, m)
        if r % 2 == 1:
            j = (r + 1) // 2
            deriv = sum(ci * L**i for i, ci in enumerate(c)) / X**m
            terms.append(-float(bernoulli(2 * j)) / math.factorial(2 * j) * deriv)
    # the partial sum and the log power cancel; their size sets the rounding floor
    return math.fsum(terms), math.fsum(abs(t) for t in terms)


def stieltjes_oracle(k: int, a, M: int = 8, *, with_error: bool = False):
    """gamma_k(a) from the limit definition at cutoffs M, 2M, 4M.

    The three estimates must settle (each difference no larger than the
    previous one, up to rounding noise); otherwise StieltjesInstability is
    raised with the estimates attached.
    """
    k = _check_k(k, ORACLE_MAX_K)
    a = _as_float(a)
    if M < 8:
        # the Euler-Maclaurin tail with 20 Bernoulli terms needs M + a >= 8
        raise ValueError("cutoff M must be at least 8")
    runs = [_oracle_once(k, a, M * 2**i) for i in range(3)]
    est = [v for v, _ in runs]
    d1, d2 = abs(est[1] - est[0]), abs(est[2] - est[1])
    noise = 2e-16 * max(m for _, m in runs) * (1 + k)
    if d2 > max(d1, noise) * 1.5:
        raise StieltjesInstability(f"oracle for k={k}, a={a} did not settle: {est}", est)
    err = max(d2, noise)
    return (est[2], err) if with_error else est[2]


# ---------------------------------------------------------- summatory ----

@dataclass(frozen=True)
class SummatorySpec:
    """sum_j c_j sum_n (-x)^n gamma_n(a_j) / n!, truncated at N_max."""

    terms: tuple[tuple[Fraction, Fraction], ...]
    x: float
    N_max: int = 40
    allow_pole: bool = field(default=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple((Fraction(c), Fraction(a)) for c, a in self.terms)
        )
        if any(a <= 0 for _, a in self.terms):
            raise ValueError("every a_j must be positive")
        if not 0 <= self.N_max <= MAX_K:
            raise ValueError(f"N_max must lie in 0..{MAX_K}")
        if self.x == 0 and self.coefficient_sum != 0 and not self.allow_pole:
            raise ValueError("x = 0 exposes the pole unless the coefficients sum to zero")

    @property
    def coefficient_sum(self) -> Fraction:
        return sum((c for c, _ in self.terms), Fraction(0))


class SummatoryResult(NamedTuple):
    closed_form: float
    partial_sums: list[float]
    partial_errors: list[float]


def summatory_eval(spec: SummatorySpec) -> SummatoryResult:
    """Closed form sum_j c_j [zeta(1+x, a_j) - 1/x] and the partial sums S_0 .. S_Nmax."""
    x = float(spec.x)
    if x == 0 and spec.coefficient_sum != 0:
        raise ValueError("x = 0 exposes the pole unless the coefficients sum to zero")
    closed = math.fsum(float(c) * hurwitz_zeta_regular(1.0 + x, float(a)) for c, a in spec.terms)
    n = spec.N_max
    weights = np.array([(-x) ** i / math.factorial(i) for i in range(n + 1)])
    combo = np.zeros(n + 1)
    combo_err = np.zeros(n + 1)
    for c, a in spec.terms:
        v, e = stieltjes_gammas(n, float(a))
        combo += float(c) * v
        combo_err += abs(float(c)) * e
    partial, errors = [], []
    acc_terms: list[float] = []
    err = 0.0
    for i in range(n + 1):
        acc_terms.append(weights[i] * combo[i])
        err += abs(weights[i]) * combo_err[i]
        partial.append(math.fsum(acc_terms))
        errors.append(err)
    return SummatoryResult(closed, partial, errors)


def convergence_profile(spec: SummatorySpec) -> list[tuple[int, float, float]]:
    """Rows (N, S_N, |S_N - closed form|)."""
    res = summatory_eval(spec)
    return [(N, s, abs(s - res.closed_form)) for N, s in enumerate(res.partial_sums)]


def summatory(terms: Sequence[tuple], x: float, N_max: int = 40) -> SummatoryResult:
    """Shorthand for ``summatory_eval(SummatorySpec(terms, x, N_max))``."""
    return summatory_eval(SummatorySpec(tuple(terms), x, N_max))
