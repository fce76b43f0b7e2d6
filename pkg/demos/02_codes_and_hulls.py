"""Duals, hulls and exact minimum distance of small codes over GF(9)."""

import numpy as np

from hullcraft.field import tower_for_q
from hullcraft.lincode import (
    LinearCode,
    euclidean_dual,
    hermitian_dual,
    hermitian_hull,
    min_distance,
    puncture,
    shorten,
)
from hullcraft.rsfam import rs_eval

t = tower_for_q(3)

# A line spanned by (1, 1+i) is Hermitian self-orthogonal since
# 1 + norm(1+i) = 1 + 2 = 0 in GF(3).
line = LinearCode.from_generator(t, np.array([[1, 4]]), 2)
print("line               ", line.gen.entries.tolist())
print("Euclidean dual     ", euclidean_dual(line).gen.entries.tolist())
print("Hermitian dual     ", hermitian_dual(line).gen.entries.tolist())
print("hull dimension     ", hermitian_hull(line).hull_dim)

# Reed-Solomon code on the 8th roots of unity
rs = rs_eval(t, t.subgroup(8), 4)
print("\nRS(8,4):", rs, "d =", min_distance(rs))
p = puncture(rs, {7})
s = shorten(rs, {0})
print("punctured at 7:", p, "d =", min_distance(p))
print("shortened at 0:", s, "d =", min_distance(s))
print("hull of RS(8,4):", hermitian_hull(rs).hull_dim)

# codes round-trip through a plain-text format
print("\n" + rs.to_text())
