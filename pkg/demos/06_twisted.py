"""Twisted Reed-Solomon codes: duals, MDS-ness, hulls and Schur squares."""

import math

from hullcraft.lincode import min_distance
from hullcraft.rsfam import rs_eval
from hullcraft.twistrs import (
    TwistSpec,
    duality_signs,
    eta_in_alpha,
    schur_square_dim,
    twisted_bound_count,
    twisted_code,
    twisted_hull_candidate,
    twisted_monomial_count,
)

spec = TwistSpec(3, 4, 2, 4)
print("C(alpha, 1+i, 2) over GF(9):", twisted_code(spec), "d =", min_distance(twisted_code(spec)))
print("eta in alpha:", eta_in_alpha(spec), "  dual sign check:", duality_signs(spec))

# The Schur square separates twisted codes from RS codes of the same size.
t = spec.tower
for k in (3, 4, 5):
    rs = rs_eval(t, t.subgroup(8), k)
    tw = twisted_code(TwistSpec(3, 8, k, 4))
    print(f"k={k}: RS square dim {schur_square_dim(rs)}, twisted square dim {schur_square_dim(tw)}")

# Hull of the twisted candidate against two lower estimates.
print(f"\n{'q':>2} {'n':>3} {'k':>3} {'ceil':>5} {'count':>6} {'monomials':>10} {'hull':>5}")
for q, n in ((3, 8), (4, 15)):
    for k in range(math.ceil(n / 2), n):
        _, r = twisted_hull_candidate(TwistSpec(q, n, k, 1))
        print(f"{q:>2} {n:>3} {k:>3} {math.ceil(r.bound_claimed):>5} {twisted_bound_count(q, n, k):>6} "
              f"{twisted_monomial_count(q, n, k):>10} {r.hull_dim:>5}")
