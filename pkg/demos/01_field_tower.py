"""GF(3) inside GF(9): arithmetic, Frobenius, norm and cyclic subgroups."""

import numpy as np

from hullcraft.field import tower_for_q

t = tower_for_q(3)
print(t.header())

# Elements are integers whose base-3 digits are polynomial coefficients:
# a + b*i is stored as a + 3*b, with i^2 = -1.
i, one_plus_i = 3, 4
print("i * i      =", t.mul(i, i))
print("(1+i)^-1   =", t.inv(one_plus_i))
print("frob(i)    =", t.frob(i), "(that is 2i)")
print("norm(1+i)  =", t.norm(one_plus_i))

# everything vectorises over numpy arrays
e = t.elements
print("\nelement  frob  norm")
for x, f, nm in zip(e, t.frob(e), t.norm(e)):
    print(f"{x:>7} {f:>5} {nm:>5}")

# the subfield is exactly the set fixed by Frobenius
print("\nfixed by Frobenius:", e[t.frob(e) == e].tolist())

# cyclic subgroups are generated by powers of the primitive element
for n in (2, 4, 8):
    S = t.subgroup(n)
    print(f"order {n} subgroup:", S.tolist(), "all x^n = 1:", bool(np.all(t.pow(S, n) == 1)))
