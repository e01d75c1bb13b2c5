"""Numeric plumbing: double-exponential quadrature, compensated sums,
divisor sums, a segmented prime sieve and the Pell/fundamental-unit solver."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Iterator

import numpy as np

__all__ = [
    "QuadratureError",
    "QuadratureResult",
    "de_quadrature",
    "compensated_sum",
    "divisor_sigma",
    "SieveSegment",
    "sieve_primes",
    "primes_below",
    "cached_primes",
    "is_prime",
    "PellUnit",
    "pell_fundamental",
]

MAX_LEVEL = 12
# t-ranges chosen so that the distance to a finite endpoint stays above ~1e-300.
_TANH_SINH_TMAX = math.asinh(2.0 * 345.0 / math.pi)
_EXP_SINH_TMIN = -math.asinh(2.0 * 690.0 / math.pi)
_EXP_SINH_TMAX = math.asinh(2.0 * 345.0 / math.pi)


class QuadratureError(RuntimeError):
    """Quadrature failed; ``best`` holds the last estimate (or None)."""

    def __init__(self, message: str, best=None, abscissa: float | None = None):
        super().__init__(message)
        self.best = best
        self.abscissa = abscissa


@dataclass(frozen=True)
class QuadratureResult:
    value: float | np.ndarray
    error_estimate: float
    evaluations: int
    # per-component differences for vector integrands
    component_errors: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.error_estimate >= 0:
            raise ValueError("error_estimate must be non-negative")
        if self.evaluations <= 0:
            raise ValueError("evaluations must be positive")


def _tanh_sinh_nodes(a: float, b: float, t: np.ndarray):
    u = 0.5 * math.pi * np.sinh(t)
    du = 0.5 * math.pi * np.cosh(t)
    width = b - a
    # Distances to the nearer endpoint are formed directly to keep them exact-ish.
    with np.errstate(over="ignore"):
        left = width / (1.0 + np.exp(2.0 * u))
        right = width / (1.0 + np.exp(-2.0 * u))
        w = width * du / (2.0 * np.cosh(u) ** 2)
    x = np.where(t < 0, a + left, b - right)
    keep = (x > a) & (x < b) & np.isfinite(w) & (w > 0)
    return x[keep], w[keep]


def _exp_sinh_nodes(a: float, t: np.ndarray):
    u = 0.5 * math.pi * np.sinh(t)
    with np.errstate(over="ignore"):
        d = np.exp(u)
        w = 0.5 * math.pi * np.cosh(t) * d
    x = a + d
    keep = (x > a) & np.isfinite(x) & np.isfinite(w)
    return x[keep], w[keep]


def _level_offsets(level: int, tmin: float, tmax: float) -> tuple[np.ndarray, float]:
    """Abscissae in t that are new at ``level`` (all of them at level 0)."""
    h = 2.0 ** -level
    if level == 0:
        k = np.arange(math.ceil(tmin), math.floor(tmax) + 1, dtype=float)
        return k, h
    lo = math.ceil((tmin / h - 1) / 2)
    hi = math.floor((tmax / h - 1) / 2)
    k = 2.0 * np.arange(lo, hi + 1, dtype=float) + 1.0
    return k * h, h


def de_quadrature(
    integrand: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float = math.inf,
    target_abs_err: float = 1e-12,
    target_rel_err: float = 0.0,
    max_level: int = MAX_LEVEL,
    min_level: int = 3,
) -> QuadratureResult:
    """Integrate ``integrand`` over [a, b] (b may be ``inf``).

    Finite intervals use tanh-sinh, [a, inf) uses exp-sinh. The step is halved
    each level until successive estimates differ by less than the target.
    ``integrand`` receives a 1-D array of abscissae and returns either an
    array of the same length or one of shape (n, m) for m simultaneous
    integrands (the returned value is then an array of length m).
    """
    a = float(a)
    if math.isinf(b):
        if b < 0:
            raise ValueError("only [a, inf) semi-infinite domains are supported")
        tmin, tmax = _EXP_SINH_TMIN, _EXP_SINH_TMAX
        nodes = lambda t: _exp_sinh_nodes(a, t)  # noqa: E731
    else:
        b = float(b)
        if not b > a:
            if b == a:
                return QuadratureResult(0.0, 0.0, 1)
            raise ValueError("need a < b")
        tmin, tmax = -_TANH_SINH_TMAX, _TANH_SINH_TMAX
        nodes = lambda t: _tanh_sinh_nodes(a, b, t)  # noqa: E731

    total = None
    prev = None
    evaluations = 0
    err = math.inf
    for level in range(max_level + 1):
        t, h = _level_offsets(level, tmin, tmax)
        x, w = nodes(t)
        evaluations += len(x)
        fx = np.asarray(integrand(x))
        if fx.ndim == 1:
            bad = ~np.isfinite(fx)
            contrib = w @ fx if len(x) else 0.0
        else:
            bad = ~np.all(np.isfinite(fx), axis=tuple(range(1, fx.ndim)))
            contrib = np.tensordot(w, fx, axes=(0, 0)) if len(x) else 0.0
        if np.any(bad):
            where = float(x[np.argmax(bad)])
            raise QuadratureError(
                f"integrand returned a non-finite value at x={where!r}", best=prev, abscissa=where
            )
        if level == 0:
            total = contrib
            estimate = h * total
        else:
            total = total + contrib
            estimate = h * total
        if prev is not None:
            diff = np.abs(np.asarray(estimate) - np.asarray(prev))
            err = float(np.max(diff))
            # each component must meet its own tolerance
            tol = np.maximum(target_abs_err, target_rel_err * np.abs(estimate))
            if level >= min_level and np.all(diff <= tol):
                comp = diff if np.ndim(estimate) else None
                return QuadratureResult(estimate, err, evaluations, comp)
        prev = estimate
    raise QuadratureError(
        f"no convergence after {max_level} levels (last difference {err:.3e})", best=prev
    )


def compensated_sum(terms: Iterable[float]) -> float:
    """Sum with exact rounding (Shewchuk via ``math.fsum``); ``[]`` gives 0."""
    if isinstance(terms, np.ndarray):
        terms = terms.ravel().tolist()
    return math.fsum(terms)


def divisor_sigma(alpha: int, n: int) -> int | Fraction:
    """Sum of ``d**alpha`` over the positive divisors d of n (exact)."""
    if n <= 0:
        raise ValueError("divisor_sigma needs n >= 1")
    divisors = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            divisors.append(d)
            if d * d != n:
                divisors.append(n // d)
    if alpha >= 0:
        return sum(d**alpha for d in divisors)
    return sum((Fraction(1, d ** (-alpha)) for d in divisors), Fraction(0))


# ---------------------------------------------------------------- primes ----

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    n = int(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class SieveSegment:
    lo: int
    hi: int
    primes: np.ndarray = field(repr=False)

    def spot_check(self, samples: int = 8) -> bool:
        """Check strict ordering, bounds and primality of sampled entries."""
        p = self.primes
        if len(p) == 0:
            return True
        if np.any(np.diff(p) <= 0) or p[0] < self.lo or p[-1] >= self.hi:
            return False
        idx = np.unique(np.linspace(0, len(p) - 1, min(samples, len(p))).astype(int))
        return all(is_prime(int(p[i])) for i in idx)


_MAX_SIEVE_LIMIT = 1 << 40


def _base_primes(n: int) -> np.ndarray:
    """Primes <= n via a plain bytearray sieve (for the segmented pass)."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve_primes(limit: int, segment_size: int = 1 << 20) -> Iterator[SieveSegment]:
    """Yield the primes below ``limit`` in ascending segments.

    Odds-only segmented Eratosthenes; ``segment_size`` counts integers per
    segment. The concatenated output does not depend on ``segment_size``.
    """
    limit = int(limit)
    if limit < 2:
        raise ValueError("limit must be >= 2")
    if limit > _MAX_SIEVE_LIMIT:
        raise MemoryError(f"sieve limit {limit} exceeds supported range {_MAX_SIEVE_LIMIT}")
    segment_size = max(2, int(segment_size) & ~1)
    base = _base_primes(isqrt(limit - 1) + 1)
    odd_base = base[1:]
    lo = 0
    while lo < limit:
        hi = min(lo + segment_size, limit)
        # index i in the segment represents the odd number first_odd + 2*i
        first_odd = lo | 1
        count = max(0, (hi - first_odd + 1) // 2)
        flags = np.ones(count, dtype=bool)
        for p in odd_base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((first_odd + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= hi:
                continue
            flags[(start - first_odd) // 2 :: p] = False
        primes = first_odd + 2 * np.flatnonzero(flags).astype(np.int64)
        if lo == 0:
            primes = primes[primes > 1]
            if limit > 2:
                primes = np.concatenate(([2], primes)).astype(np.int64)
        yield SieveSegment(lo, hi, primes)
        lo = hi


def primes_below(limit: int, segment_size: int = 1 << 20) -> np.ndarray:
    """All primes p < limit as one int64 array."""
    if limit <= 2:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate([seg.primes for seg in sieve_primes(limit, segment_size)])


@lru_cache(maxsize=4)
def cached_primes(limit: int) -> np.ndarray:
    """Read-only ``primes_below(limit)``, memoized for the few limits in use."""
    p = primes_below(int(limit))
    p.setflags(write=False)
    return p


# ------------------------------------------------------------------ Pell ----

_INT128 = 1 << 127


@dataclass(frozen=True)
class PellUnit:
    """Fundamental unit ``(x + y*sqrt(D)) / 2`` of the order of discriminant D."""

    D: int
    x: int
    y: int

    @property
    def norm(self) -> int:
        return (self.x * self.x - self.D * self.y * self.y) // 4

    @property
    def unit_value(self) -> float:
        return (self.x + self.y * math.sqrt(self.D)) / 2.0

    @property
    def log_value(self) -> float:
        # log of (x + y sqrt D)/2 without overflow for large x, y
        return math.log(self.x + self.y * math.sqrt(self.D)) - math.log(2.0)


def _quadratic_cf(P: int, Q: int, D: int) -> Iterator[int]:
    """Partial quotients of (P + sqrt(D)) / Q, requiring Q | D - P^2."""
    r = isqrt(D)
    while True:
        if Q > 0:
            a = (P + r) // Q
        else:
            a = (P + r + 1) // Q
        yield a
        P = a * Q - P
        Q = (D - P * P) // Q


def pell_fundamental(D: int) -> PellUnit:
    """Smallest unit > 1 of Z + ((D + sqrt D)/2) Z for a fundamental D > 1.

    Scans the convergents of the continued fraction of sqrt(D/4) (D = 0 mod 4)
    or of (sqrt(D) - 1)/2 (D = 1 mod 4); the first convergent of unit norm
    gives the fundamental unit.
    """
    from .characters import is_fundamental

    D = int(D)
    if D <= 1 or isqrt(D) ** 2 == D:
        raise ValueError(f"D={D} must be a positive non-square")
    if not is_fundamental(D):
        raise ValueError(f"D={D} is not a fundamental discriminant")
    if D % 4 == 0:
        m = D // 4
        cf = _quadratic_cf(0, 1, m)
    else:
        m = None
        cf = _quadratic_cf(-1, 2, D)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for _ in range(100000):
        a = next(cf)
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
        if abs(h) >= _INT128 or abs(k) >= _INT128:
            raise OverflowError(f"Pell convergents for D={D} exceed 128 bits")
        if k == 0:
            continue
        if m is not None:
            if h * h - m * k * k in (1, -1):
                return PellUnit(D, 2 * h, k)
        else:
            if h * h + h * k + k * k * (1 - D) // 4 in (1, -1):
                return PellUnit(D, 2 * h + k, k)
    raise RuntimeError(f"no unit found for D={D}")
