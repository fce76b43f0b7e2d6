"""Hull sizes of the subgroup and coset Reed-Solomon families.

Each constructor reports a claimed lower bound next to the exact hull
dimension, so the bounds can be compared with the truth instance by instance.
"""

import math

from hullcraft.field import tower_for_q
from hullcraft.rsfam import FamilySpec, build_family, default_representatives, subgroup_candidate

print("subgroup family: hull vs  ceil(k(n-k-2)/q^2)  and the monomial count")
print(f"{'q':>2} {'n':>3} {'k':>3} {'ceil':>5} {'count':>6} {'hull':>5}")
for q in (3, 4, 5):
    t = tower_for_q(q)
    for n in range(4, q * q):
        if (q * q - 1) % n:
            continue
        for k in range(math.ceil(n / 2), n - 1):
            _, r = subgroup_candidate(t, n, k)
            flag = "" if r.oracle_ok else "   <- below the estimate"
            print(f"{q:>2} {n:>3} {k:>3} {math.ceil(r.bound_claimed):>5} {r.bound_count:>6} {r.hull_dim:>5}{flag}")

# When n divides q + 1, jq = -j mod n, so no monomial x^(jq) with j <= k
# falls in 0..n-k-1 and the construction has a trivial hull.
print("\ncoset family over GF(16) with n_1 = 5")
t = tower_for_q(4)
for v in (1, 2, 3):
    for k in range(math.ceil(5 * v / 2), 5 * v):
        spec = FamilySpec("coset", 4, 5 * v, k, 5, v, default_representatives(t, v))
        C, r = build_family(spec)
        print(f"  n={C.n:>2} k={k:>2} k_1={spec.k_1}  bound={float(r.bound_claimed):5.2f}  hull={r.hull_dim}")
