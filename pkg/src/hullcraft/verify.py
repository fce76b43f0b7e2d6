"""Oracle sweeps that check each claimed hull bound on concrete instances.

Every sweep yields :class:`Check` rows; a failing row is a finding about
the claim, not an error in the sweep.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .eaqec import (
    distinct_c_bound,
    count_distinct_c,
    enumerate_for_length_distance,
    is_mds_eaqec,
    length_distance_pairs,
)
from .errors import BudgetExceeded
from .field import tower_for_q
from .hullctl import reduce_hull
from .lincode import hull_dim, is_mds
from .rsfam import FamilySpec, build_family, subgroup_candidate, valid_coset_orders
from .twistrs import (
    TwistSpec,
    check_twisted_duality,
    eta_in_alpha,
    is_twisted_mds,
    twisted_hull_candidate,
)


@dataclass(frozen=True)
class Check:
    claim: str
    instance: str
    claimed: object
    oracle: object
    ok: bool

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.claim} {self.instance} claimed={self.claimed} oracle={self.oracle}"


def subgroup_orders(q: int, n_min: int = 2, n_max: int | None = None):
    Q = q * q
    return [n for n in range(n_min, Q) if (Q - 1) % n == 0 and (n_max is None or n <= n_max)]


def subgroup_instances(q: int, n_min: int = 4):
    """(n, k) with n | q^2 - 1, n >= n_min and n/2 <= k <= n - 2."""
    for n in subgroup_orders(q, n_min):
        for k in range(math.ceil(n / 2), n - 1):
            yield n, k


def coset_specs(q: int, n_max: int = 40, punctured: bool = True):
    """Every coset (and punctured-coset) family member with length <= n_max.

    Representatives range over all v-subsets of GF(q)*.
    """
    t = tower_for_q(q)
    units = [int(x) for x in t.subfield()[1:]]
    for n_1 in valid_coset_orders(q):
        for v in range(1, q):
            full = v * n_1
            for b in itertools.combinations(units, v):
                for t_cut in range(full if punctured else 1):
                    n = full - t_cut
                    if n > n_max or n < 1:
                        continue
                    for k in range(max(1, math.ceil(n / 2)), n + 1):
                        if t_cut >= n - k + 1 or k // q > q - 1:
                            continue
                        family = "punctured-coset" if t_cut else "coset"
                        yield FamilySpec(family, q, n, k, n_1, v, b, t_cut)


def check_subgroup_bound(q: int):
    for n, k in subgroup_instances(q):
        _, r = subgroup_candidate(tower_for_q(q), n, k)
        need = math.ceil(r.bound_claimed)
        ok = r.hull_dim >= r.bound_count >= need
        yield Check("subgroup-bound", f"q={q} n={n} k={k}", f"{r.bound_claimed} (ceil {need}), count={r.bound_count}",
                    r.hull_dim, ok)


def check_coset(q: int, punctured: bool, n_max: int = 40):
    name = "punctured-bound" if punctured else "coset-bound"
    for spec in coset_specs(q, n_max, punctured):
        if (spec.family == "punctured-coset") != punctured:
            continue
        _, r = build_family(spec)
        need = max(0, math.ceil(r.bound_claimed))
        inst = (f"q={q} n_1={spec.n_1} b={list(spec.b)} t={spec.t} n={spec.n} k={spec.k} "
                f"(q+1)|n_1={spec.printed_condition()}")
        yield Check(name, inst, f"{r.bound_claimed} (ceil {need})", r.hull_dim, r.hull_dim >= need)


def family_codes(q: int, n_max: int = 40):
    """Subgroup, coset and punctured codes over GF(q^2) (default representatives)."""
    t = tower_for_q(q)
    for n, k in subgroup_instances(q):
        yield FamilySpec("subgroup", q, n, k), subgroup_candidate(t, n, k)[0]
    for spec in coset_specs(q, n_max):
        if spec.b != tuple(int(x) for x in t.subfield()[1: spec.v + 1]):
            continue
        yield spec, build_family(spec)[0]


def check_reduction(q: int):
    for spec, C in family_codes(q):
        h = hull_dim(C)
        for lt in range(h + 1):
            D, plan = reduce_hull(C, lt)
            got = hull_dim(D)
            inst = f"{spec.family} q={q} n={spec.n} k={spec.k} t={spec.t} h={h} target={lt}"
            yield Check("hull-reduction", inst, lt, got, got == lt and D.n == C.n and D.k == C.k)


def check_length_distance(q: int, n_max: int | None = None, budget=None):
    for n, d in length_distance_pairs(q, n_max, n_min=2):
        recs = enumerate_for_length_distance(q, n, d, budget)
        good = [r for r in recs if r.eaqec.c >= 1 and is_mds_eaqec(r.eaqec)]
        exact = all(2 * r.d + r.eaqec.k == r.n + r.eaqec.c + 2 for r in recs)
        yield Check("length-distance", f"q={q} n={n} d={d}", ">=1 record with c>=1", len(good), bool(good) and exact)


def _distinct_c_specs(q: int, family: str):
    if family == "subgroup":
        for n, k in subgroup_instances(q, n_min=2):
            yield FamilySpec("subgroup", q, n, k)
        return
    for spec in coset_specs(q, n_max=40):
        if spec.family == family:
            yield spec


def check_distinct_c(q: int, family: str, budget=None):
    """Distinct nonzero c over hull levels against floor(bound) + 1."""
    t = tower_for_q(q)
    for spec in _distinct_c_specs(q, family):
        if spec.family != "subgroup" and spec.b != tuple(int(x) for x in t.subfield()[1: spec.v + 1]):
            continue
        if spec.n - spec.k < 1:
            continue
        claim = distinct_c_bound(spec)
        need = max(0, math.floor(claim)) + 1
        got = count_distinct_c(q, spec.n, spec.k, spec, budget)
        inst = f"{spec.family} q={q} n={spec.n} k={spec.k} t={spec.t}"
        yield Check(f"distinct-c-{family}", inst, f"{claim} -> >= {need}", got, got >= need)


def twist_specs(q: int, n_max: int = 16, k_min_ratio: bool = False):
    for n in subgroup_orders(q, 2, n_max):
        k_lo = math.ceil(n / 2) if k_min_ratio else 1
        for k in range(k_lo, n):
            for eta in range(1, q * q):
                yield TwistSpec(q, n, k, eta)


def check_duality(q: int):
    for spec in twist_specs(q):
        ok = check_twisted_duality(spec)
        yield Check("twisted-duality", f"q={q} n={spec.n} k={spec.k} eta={spec.eta}", True, ok, ok)


def check_twisted_mds(q: int, budget=None):
    for spec in twist_specs(q):
        if eta_in_alpha(spec):
            continue
        ok = is_twisted_mds(spec, budget)
        yield Check("twisted-mds", f"q={q} n={spec.n} k={spec.k} eta={spec.eta}", "MDS", ok, ok)


def check_twisted_bound(q: int):
    for spec in twist_specs(q, k_min_ratio=True):
        _, r = twisted_hull_candidate(spec)
        need = math.ceil(r.bound_claimed)
        yield Check("twisted-bound", f"q={q} n={spec.n} k={spec.k} eta={spec.eta}", f"{r.bound_claimed} (ceil {need})",
                    r.hull_dim, r.hull_dim >= need)


def check_mds(q: int, budget=None):
    """Exhaustive or column-subset MDS check of every family code."""
    for spec, C in family_codes(q):
        try:
            ok = is_mds(C, budget)
        except BudgetExceeded:
            continue
        yield Check("mds", f"{spec.family} q={q} n={spec.n} k={spec.k} t={spec.t}", spec.n - spec.k + 1,
                    "MDS" if ok else "not MDS", ok)


SWEEPS = {
    "length-distance": check_length_distance,
    "subgroup-bound": check_subgroup_bound,
    "coset-bound": lambda q: check_coset(q, punctured=False),
    "punctured-bound": lambda q: check_coset(q, punctured=True),
    "hull-reduction": check_reduction,
    "distinct-c-subgroup": lambda q: check_distinct_c(q, "subgroup"),
    "distinct-c-coset": lambda q: check_distinct_c(q, "coset"),
    "distinct-c-punctured": lambda q: check_distinct_c(q, "punctured-coset"),
    "twisted-duality": check_duality,
    "twisted-mds": check_twisted_mds,
    "twisted-bound": check_twisted_bound,
    "mds": check_mds,
}

# Short numeric ids accepted by ``hullcraft verify --theorem``.
ALIASES = {
    "3.1": "length-distance",
    "3.2": "subgroup-bound",
    "3.3": "coset-bound",
    "4.1": "twisted-bound",
    "prop3.1": "hull-reduction",
    "prop4.1": "twisted-duality",
    "prop4.2": "twisted-mds",
    "cor3.1": "punctured-bound",
    "cor3.2": "distinct-c-subgroup",
    "cor3.3": "distinct-c-coset",
    "cor3.4": "distinct-c-punctured",
}


def resolve(claim: str) -> str | None:
    claim = ALIASES.get(claim, claim)
    return claim if claim in SWEEPS else None


def run(claim: str, q: int):
    return list(SWEEPS[resolve(claim)](q))
