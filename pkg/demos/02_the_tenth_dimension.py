"""Where the guarantee breaks: dimension ten.

The sphere maximum of the criterion product is (sqrt(n) + 1) / 2. Up
to n = 9 that stays at or under 2, so every direction admits a vertex
whose shadow stays inside the section. At n = 10 the maximum crosses 2
and a concrete direction appears whose 1024 vertex shadows all land
outside.
"""

import numpy as np

from cubeshadows import (
    closed_form_max,
    criterion,
    enumerate_shadows,
    maximizer,
    threshold_dimension,
)

print(" n   max product   every direction ok?")
for n in range(1, 13):
    mv = closed_form_max(n)
    mark = "yes" if mv <= 2.0 else "no"
    print(f"{n:>2}   {mv:<12.6f}  {mark}")

print(f"\nlargest safe dimension: {threshold_dimension()}\n")

u = maximizer(10)
print("the extremal direction in ten dimensions:")
print(np.array2string(u.coords, precision=6))

res = criterion(u)
print(f"\ncriterion product: {res.product}")
print(f"satisfied: {res.satisfied}")

verdict = enumerate_shadows(u)
print(f"\nchecked all {verdict.vertices_checked} vertices:")
print(f"  nearest shadow has sup norm {verdict.best_inf_norm:.6f} (> 1)")
print(f"  exists_inside = {verdict.exists_inside}")
print("\nso in ten dimensions the central section can evade every "
      "vertex shadow, while in nine it never can.")
