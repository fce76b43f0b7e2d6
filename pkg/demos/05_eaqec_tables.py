"""Tables of MDS entanglement-assisted codes obtained from hull levels.

An [n, k, d] code with an l-dimensional hull gives [[n, k-l, d, n-k-l]];
walking l from the natural hull down to 0 trades entanglement for rate.
"""

from hullcraft.eaqec import sweep_length_distance, length_distance_pairs

q = 3
pairs = [(n, d) for n, d in length_distance_pairs(q, n_max=10) if n >= 4]
records = sweep_length_distance(q, pairs, workers=2)

print(f"{'family':<10} {'[n,k,d]':<10} {'l':>2}  code")
for r in records:
    e = r.eaqec
    print(f"{r.family:<10} [{r.n},{r.k},{r.d}]".ljust(22), f"{r.level:>2}  {e}  defect={r.defect}")

print(f"\n{len(records)} records, all on the Singleton bound:", all(r.mds for r in records))
