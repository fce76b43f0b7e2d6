"""Lowering a Hermitian hull one dimension at a time by scaling coordinates."""

from hullcraft.field import tower_for_q
from hullcraft.hullctl import reduce_hull, smallest_non_unit_norm
from hullcraft.lincode import hull_dim, min_distance
from hullcraft.rsfam import subgroup_candidate

t = tower_for_q(3)
C, report = subgroup_candidate(t, 8, 4)
print("start:", C, "d =", min_distance(C), "hull =", report.hull_dim)
print("scaling element:", smallest_non_unit_norm(t), "with norm", t.norm(smallest_non_unit_norm(t)))

# Scaling the pivot coordinate of a hull basis vector by an element whose
# norm is not 1 drops that vector from the hull and leaves the rest intact.
for target in range(report.hull_dim, -1, -1):
    D, plan = reduce_hull(C, target)
    print(f"target {target}: hull {hull_dim(D)}, d {min_distance(D)}, scaled positions {plan.positions}")
