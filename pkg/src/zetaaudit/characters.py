"""Kronecker symbols, real primitive character tables and class numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .numerics import PellUnit, pell_fundamental

__all__ = [
    "is_fundamental",
    "kronecker_symbol",
    "CharacterTable",
    "character_table",
    "QuadraticFieldData",
    "class_number",
    "fundamental_discriminants",
]


def _squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


def is_fundamental(D: int) -> bool:
    """True for D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree.

    D = 1 (the trivial character) counts as fundamental.
    """
    D = int(D)
    if D == 1:
        return True
    if D == 0 or (D > 0 and isqrt(D) ** 2 == D):
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 1 by 2-adic reduction and reciprocity."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        return 0
    result = 1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 == 1 and a % 8 in (3, 5):
        result = -result
    # Jacobi symbol (a/n) for odd n
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_symbol(D: int, n: int) -> int:
    """The character value chi_D(n) in {-1, 0, 1}."""
    D, n = int(D), int(n)
    if n <= 0:
        raise ValueError("kronecker_symbol needs n >= 1")
    if not (D in (1, -1) or is_fundamental(D)):
        raise ValueError(f"D={D} is not a fundamental discriminant")
    return _kronecker(D, n)


@dataclass(frozen=True)
class CharacterTable:
    D: int
    values: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return abs(self.D)

    @property
    def parity(self) -> str:
        return "odd" if self.values[-2 if self.modulus > 1 else 0] == -1 else "even"

    def __call__(self, n: int) -> int:
        return self.values[(n - 1) % self.modulus]

    def support(self) -> list[tuple[int, int]]:
        """(m, chi(m)) for 1 <= m <= |D| with chi(m) != 0."""
        return [(m, c) for m, c in enumerate(self.values, start=1) if c]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)


@lru_cache(maxsize=None)
def character_table(D: int) -> CharacterTable:
    """Value table chi_D(1..|D|), checked for the character invariants."""
    D = int(D)
    if not is_fundamental(D):
        raise ValueError(f"D={D} is not a fundamental discriminant")
    k = abs(D)
    if k > 10**6:
        raise ValueError("|D| too large for a table")
    vals = tuple(_kronecker(D, n) for n in range(1, k + 1))
    table = CharacterTable(D, vals)
    if D != 1:
        if sum(vals) != 0:
            raise ArithmeticError(f"character sum for D={D} is {sum(vals)}")
        if vals[k - 2] != (1 if D > 0 else -1):
            raise ArithmeticError(f"parity of chi_{D} does not match sign of D")
        step = max(1, k // 17)
        for m in range(1, k + 1, step):
            for n in range(1, k + 1, step):
                if vals[(m * n - 1) % k] != vals[m - 1] * vals[n - 1]:
                    raise ArithmeticError(f"chi_{D} not multiplicative at {m}*{n}")
    return table


def fundamental_discriminants(bound: int) -> list[int]:
    """All fundamental D != 1 with |D| <= bound, ordered by |D| then sign."""
    out = [d for k in range(3, bound + 1) for d in (-k, k) if is_fundamental(d)]
    return out


@dataclass(frozen=True)
class QuadraticFieldData:
    D: int
    h: int
    w: int
    unit: PellUnit | None
    rounding_distance: float
    L1: float


def _units_count(D: int) -> int:
    return {-3: 6, -4: 4}.get(D, 2)


def class_number(D: int) -> QuadraticFieldData:
    """Class number of Q(sqrt D), D < 0, by inverting the class number formula."""
    from .lfunctions import l_value

    D = int(D)
    if not (-(10**4) < D < 0) or not is_fundamental(D):
        raise ValueError(f"class_number needs a fundamental -10^4 < D < 0, got {D}")
    w = _units_count(D)
    L1 = l_value(D, 1.0).value
    h_real = w * math.sqrt(-D) * L1 / (2.0 * math.pi)
    h = round(h_real)
    dist = abs(h_real - h)
    if dist > 0.01 or h < 1:
        raise ArithmeticError(f"class number for D={D} not near an integer: {h_real}")
    return QuadraticFieldData(D, h, w, None, dist, L1)


def real_field_data(D: int, h: int = 1) -> QuadraticFieldData:
    """Unit and L(1) bookkeeping for D > 1 (class number supplied by caller)."""
    from .lfunctions import l_value

    unit = pell_fundamental(D)
    return QuadraticFieldData(D, h, 2, unit, 0.0, l_value(D, 1.0).value)
