"""One direction, start to finish.

Take u = (3, 4) / 5 and walk through everything the library can say
about it: its norms, the criterion product, the witness vertex, that
vertex's shadow, and finally the exhaustive check over all four
vertices of the square.
"""

import numpy as np

from cubeshadows import (
    UnitVector,
    canonical_vertex,
    criterion,
    enumerate_shadows,
    norms,
    shadow,
    shadow_norm_closed_form,
)

u = UnitVector(np.array([3.0, 4.0]))
print(f"direction u = {u.coords}")

m = norms(u)
print(f"norms: l1 = {m.l1}, l2 = {m.l2}, sup = {m.linf}")
print(f"criterion product l1 * sup = {m.l1 * m.linf}")
print("the threshold is 2, so some vertex must land inside the section\n")

res = criterion(u)
print(f"criterion says satisfied = {res.satisfied}")
print(f"witness vertex (signs matched to u): {res.witness.signs}")

rep = shadow(u, res.witness)
print(f"its shadow: {rep.shadow}")
print(f"sup norm of the shadow: {rep.inf_norm}  (inside iff <= 1)")
print(f"closed form for the same number: {shadow_norm_closed_form(u)}\n")

# a mismatched vertex for contrast: its shadow pays for the sign clash
bad = canonical_vertex(UnitVector(np.array([3.0, -4.0])))
rep_bad = shadow(u, bad)
print(f"mismatched vertex {bad.signs} lands at {rep_bad.shadow}")
print(f"sup norm {rep_bad.inf_norm}: outside\n")

verdict = enumerate_shadows(u)
print(f"exhaustive check of {verdict.vertices_checked} vertices:")
print(f"  best vertex {verdict.best_vertex.signs} "
      f"with sup norm {verdict.best_inf_norm}")
print(f"  exists_inside = {verdict.exists_inside}, "
      f"agreeing with the criterion")
