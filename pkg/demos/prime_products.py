"""Residue-class prime products approaching 8G/pi^2 with rigorous enclosures."""

import math

from zetaaudit.primeprod import ResidueProductSpec, residue_product
from zetaaudit.special import CATALAN

target = 8 * CATALAN / math.pi**2
print(f"prod_(p = 3 mod 4) (p^2-1)/(p^2+1)   target 8G/pi^2 = {target:.15f}")
for k in range(3, 9):
    r = residue_product(ResidueProductSpec(4, {3: "minus"}, 2.0, 10**k))
    lo, hi = r.interval()
    inside = lo <= target <= hi
    print(f"  limit 1e{k}: {r.value:.15f}  enclosure width {hi - lo:.1e}  contains target: {inside}")
