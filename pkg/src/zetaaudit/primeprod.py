"""Truncated Euler products over primes in residue classes.

A "minus" residue contributes (p^s - 1)/(p^s + 1) per prime, a "plus" residue
the reciprocal. Products are summed in log space; the omitted primes p >= limit
are covered by a rigorous bound from pi(x) < 1.25506 x / ln x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, NamedTuple

import numpy as np

from .characters import character_table, is_fundamental
from .lfunctions import l_value
from .numerics import cached_primes, compensated_sum
from .zeta import riemann_zeta

__all__ = [
    "DEFAULT_LIMIT",
    "ResidueProductSpec",
    "ResidueProduct",
    "residue_product",
    "tail_bound",
    "euler_product_ratio",
    "character_pattern",
]

DEFAULT_LIMIT = 10**7
_ROSSER_SCHOENFELD = 1.25506  # pi(x) < 1.25506 x / ln x for x > 1


@dataclass(frozen=True)
class ResidueProductSpec:
    modulus: int
    pattern: Mapping[int, str]
    s: float = 2.0
    limit: int = DEFAULT_LIMIT
    _items: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        items = tuple(sorted((int(r) % self.modulus, str(o)) for r, o in dict(self.pattern).items()))
        if not items:
            raise ValueError("pattern is empty")
        for r, o in items:
            if gcd(r, self.modulus) != 1:
                raise ValueError(f"residue {r} is not coprime to {self.modulus}")
            if o not in ("plus", "minus"):
                raise ValueError(f"orientation must be 'plus' or 'minus', got {o!r}")
        if not self.s > 1:
            raise ValueError("products need s > 1")
        if self.limit < 100:
            raise ValueError("limit must be at least 100")
        object.__setattr__(self, "_items", items)

    def factor(self, p: int) -> float:
        """The factor contributed by a single prime (1 if its class is not in the pattern)."""
        orient = dict(self._items).get(p % self.modulus)
        if orient is None:
            return 1.0
        q = float(p) ** self.s
        return (q - 1.0) / (q + 1.0) if orient == "minus" else (q + 1.0) / (q - 1.0)


class ResidueProduct(NamedTuple):
    value: float
    log_tail_bound: float

    def interval(self) -> tuple[float, float]:
        """Rigorous enclosure of the infinite product."""
        return self.value * math.exp(-self.log_tail_bound), self.value * math.exp(self.log_tail_bound)

    def contains(self, x: float, slack: float = 0.0) -> bool:
        lo, hi = self.interval()
        return lo - slack <= x <= hi + slack


def tail_bound(s: float, limit: int) -> float:
    """Bound on sum_{p >= limit} |ln((p^s-1)/(p^s+1))| using all primes past the limit.

    |ln((1-x)/(1+x))| <= 2x/(1-x^2) with x = p^-s, and partial summation with
    x/ln x <= pi(x) < 1.25506 x/ln x gives
    sum_{p >= L} p^-s <= [1.25506 s/(s-1) - 1] L^(1-s)/ln L + L^-s.
    """
    s, L = float(s), float(limit)
    if not s > 1 or L < 100:
        raise ValueError("tail bound needs s > 1 and limit >= 100")
    prime_sum = (_ROSSER_SCHOENFELD * s / (s - 1.0) - 1.0) * L ** (1.0 - s) / math.log(L) + L**-s
    return 2.0 * prime_sum / (1.0 - L ** (-2.0 * s))


def residue_product(spec: ResidueProductSpec) -> ResidueProduct:
    """(product over primes p < limit, bound on |ln(true / truncated)|)."""
    p = cached_primes(spec.limit)
    residues = p % spec.modulus
    logs = []
    x_all = np.power(p.astype(float), -spec.s)
    for r, orient in spec._items:
        x = x_all[residues == r]
        term = np.log1p(-x) - np.log1p(x)  # ln((p^s-1)/(p^s+1))
        logs.append(term if orient == "minus" else -term)
    log_value = compensated_sum(np.concatenate(logs))
    return ResidueProduct(math.exp(log_value), tail_bound(spec.s, spec.limit))


def character_pattern(D: int) -> dict[int, str]:
    """The residues mod |D| with chi_D = -1, all marked 'minus'."""
    t = character_table(D)
    return {m: "minus" for m, c in t.support() if c == -1}


def euler_product_ratio(D: int, s: float) -> float:
    """prod_{chi_D(p) = -1} (p^s-1)/(p^s+1) = L_D(s) / (zeta(s) prod_{p | D} (1 - p^-s)).

    Comparing the Euler products of L_D and zeta prime by prime leaves
    exactly these factors, so this is the analytic value that
    ``residue_product(ResidueProductSpec(|D|, character_pattern(D), s))``
    approaches.
    """
    D = int(D)
    if not is_fundamental(D) or D == 1:
        raise ValueError(f"D={D} must be a non-trivial fundamental discriminant")
    s = float(s)
    if not s > 1:
        raise ValueError("needs s > 1")
    k = abs(D)
    ramified = [q for q in range(2, k + 1) if k % q == 0 and all(q % r for r in range(2, q))]
    denom = riemann_zeta(s) * math.prod(1.0 - q**-s for q in ramified)
    return l_value(D, s).value / denom
