"""Stieltjes constants by two independent routes and the summatory identity they feed."""

from fractions import Fraction

from zetaaudit.special import CATALAN, digamma
from zetaaudit.stieltjes import SummatorySpec, convergence_profile, stieltjes_gamma, stieltjes_oracle

print("gamma_k(1/3): integral representation vs limit definition")
for k in range(0, 9, 2):
    v, e = stieltjes_gamma(k, Fraction(1, 3))
    o = stieltjes_oracle(k, Fraction(1, 3))
    print(f"  k={k}  {v: .15f}  +-{e:.1e}   oracle diff {abs(v - o):.1e}")

v, _ = stieltjes_gamma(0, Fraction(1, 4))
print(f"\ngamma_0(1/4) + psi(1/4) = {v + digamma(0.25):.1e}")

spec = SummatorySpec(((1, Fraction(1, 4)), (-1, Fraction(3, 4))), 1.0)
print("\nsum_n (-1)^n [gamma_n(1/4) - gamma_n(3/4)] / n!  ->  16 G")
for N, s, d in convergence_profile(spec)[::6]:
    print(f"  N={N:2d}  {s:.15f}  |S_N - closed| = {d:.1e}")
print(f"  16 G = {16 * CATALAN:.15f}")
