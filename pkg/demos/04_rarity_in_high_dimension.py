"""How rare satisfying directions become.

Below ten dimensions every direction satisfies the criterion. Above,
the satisfying set shrinks fast: for a random direction the product
typically grows like a multiple of sqrt(ln n), so the fraction under
the fixed threshold 2 collapses toward zero.
"""

import math

from cubeshadows import growth_scan

DIMS = (10, 30, 100, 300, 1000, 10_000)
SAMPLES = 10_000

print(f"{SAMPLES} random directions per dimension\n")
print("    n   satisfying   median product   median / sqrt(ln n)")
for row in growth_scan(DIMS, SAMPLES, seed=7):
    print(f"{row.n:>5}   {row.frac_satisfying:>9.4f}   "
          f"{row.median_product:>14.4f}   {row.growth_ratio:>19.4f}")

print("\nthe last column barely moves while the median climbs,")
print("which is the sqrt(ln n) growth showing itself.")
print(f"for scale: sqrt(ln 10) = {math.sqrt(math.log(10)):.4f}, "
      f"sqrt(ln 10000) = {math.sqrt(math.log(10_000)):.4f}")
