"""Entanglement-assisted quantum code parameters from Hermitian hulls.

A classical [n, k, d] code over GF(q^2) whose Hermitian hull has dimension
l gives an EAQEC [[n, k - l, d, n - k - l]]_q code, and its dual side gives
[[n, n - k - l, d_perp, k - l]]_q.  Hull levels below the natural one are
realised by :func:`hullcraft.hullctl.reduce_hull`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadLevel, BadRange, BudgetExceeded, PreconditionError
from .field import tower_for_q
from .hullctl import ScalingPlan, reduce_hull
from .lincode import LinearCode, hermitian_hull, is_mds
from .rsfam import (
    FamilySpec,
    build_family,
    default_representatives,
    extended_rs,
    rs_code,
    valid_coset_orders,
)


@dataclass(frozen=True)
class EaqecParams:
    n: int
    k: int
    d: int
    c: int
    q: int | None = None
    provenance: str = ""

    def __str__(self):
        sub = f"_{self.q}" if self.q else ""
        return f"[[{self.n}, {self.k}, {self.d}, {self.c}]]{sub}"

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "c": self.c}


def _check_level(n, k, l):
    if not (0 <= l <= k and l <= n - k):
        raise BadLevel(f"level l={l} outside 0..min(k, n-k) for n={n}, k={k}")


def css_primary(n: int, k: int, d: int, l: int, q: int | None = None) -> EaqecParams:
    """[[n, k - l, d, n - k - l]] from an [n, k, d] code with an l-dim hull."""
    _check_level(n, k, l)
    return EaqecParams(n, k - l, d, n - k - l, q, f"primary [{n},{k},{d}] l={l}")


def css_dual(n: int, k: int, d_perp: int, l: int, q: int | None = None) -> EaqecParams:
    """[[n, n - k - l, d_perp, k - l]] from the Hermitian dual side."""
    _check_level(n, k, l)
    return EaqecParams(n, n - k - l, d_perp, k - l, q, f"dual [{n},{k}] d_perp={d_perp} l={l}")


def defect(p: EaqecParams) -> int:
    """(n + c + 2) - (2d + k); zero exactly on the EAQEC Singleton bound."""
    return (p.n + p.c + 2) - (2 * p.d + p.k)


def is_mds_eaqec(p: EaqecParams) -> bool:
    return defect(p) == 0 and 2 * p.d <= p.n + 2


@dataclass(frozen=True)
class DiscoveryRecord:
    q: int
    family: str
    n: int
    k: int
    d: int
    hull_dim: int
    level: int
    eaqec: EaqecParams
    family_spec: dict | None = None
    scaling: ScalingPlan | None = None
    defect: int = field(init=False)
    mds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "defect", defect(self.eaqec))
        object.__setattr__(self, "mds", is_mds_eaqec(self.eaqec))

    def sort_key(self):
        return (self.n, self.d, self.eaqec.c, self.family, self.k, self.level,
                str(self.family_spec))

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "family": self.family,
            "classical": {"n": self.n, "k": self.k, "d": self.d},
            "hull_dim": self.hull_dim,
            "level": self.level,
            "eaqec": self.eaqec.to_json(),
            "defect": self.defect,
            "mds": self.mds,
        }
        if self.family_spec is not None:
            out["family_spec"] = self.family_spec
        if self.scaling is not None:
            out["scaling"] = self.scaling.to_json()
        return out

    def csv_row(self) -> list:
        e = self.eaqec
        return [self.q, self.family, self.n, self.k, self.d, self.hull_dim, self.level,
                e.n, e.k, e.d, e.c, self.defect, str(self.mds).lower()]


CSV_COLUMNS = ["q", "family", "n", "k", "d", "hull_dim", "level",
               "eq_n", "eq_k", "eq_d", "eq_c", "defect", "mds"]


def level_records(C: LinearCode, d: int, family: str, spec_json=None, max_level=None,
                  nonzero_c=True) -> list[DiscoveryRecord]:
    """One record per hull level, each witnessed by an actual scaled code."""
    q = C.tower.q
    h = hermitian_hull(C).hull_dim
    top = min(h, C.n - C.k - 1 if nonzero_c else C.n - C.k, C.k)
    if max_level is not None:
        top = min(top, max_level)
    out = []
    for l in range(top + 1):
        _, plan = reduce_hull(C, l)
        params = css_primary(C.n, C.k, d, l, q)
        out.append(DiscoveryRecord(q, family, C.n, C.k, d, h, l, params, spec_json, plan))
    return out


def _verify_mds(C: LinearCode, budget):
    try:
        ok = is_mds(C, budget)
    except BudgetExceeded:
        return
    if not ok:
        raise AssertionError(f"constructed code {C!r} is not MDS")


def choose_family_spec(q: int, n: int, k: int) -> FamilySpec | None:
    """Subgroup family if n | q^2 - 1, else a coset family if one fits."""
    Q = q * q
    if (Q - 1) % n == 0:
        return FamilySpec("subgroup", q, n, k)
    t = tower_for_q(q)
    for n_1 in sorted(valid_coset_orders(q), reverse=True):
        if n % n_1 == 0 and 1 <= n // n_1 <= q - 1 and k // q <= q - 1:
            v = n // n_1
            return FamilySpec("coset", q, n, k, n_1, v, default_representatives(t, v))
    return None


def generic_code(q: int, n: int, k: int) -> LinearCode:
    """RS on the first n field elements, or the extended code when n = q^2 + 1."""
    t = tower_for_q(q)
    if n == t.order + 1:
        return extended_rs(t, k)
    return rs_code(t, t.elements[:n], k)


def enumerate_for_length_distance(q: int, n: int, d: int, budget: int | None = None) -> list[DiscoveryRecord]:
    """MDS EAQEC records with nonzero c for a given length and distance."""
    if q < 3:
        raise BadRange("needs q >= 3")
    tower_for_q(q)
    if not 2 <= n <= q * q + 1:
        raise BadRange(f"need 2 <= n <= q^2 + 1, got n={n}")
    if not (2 <= d and 2 * d <= n + 2):
        raise BadRange(f"need 2 <= d <= (n+2)/2, got d={d}")
    k = n - d + 1
    spec = choose_family_spec(q, n, k)
    if spec is not None:
        C, _ = build_family(spec)
        family, spec_json = spec.family, spec.to_json()
    else:
        C = generic_code(q, n, k)
        family, spec_json = "generic", None
    _verify_mds(C, budget)
    records = level_records(C, d, family, spec_json)
    return sorted(records, key=DiscoveryRecord.sort_key)


def _enumerate_pair(args):
    return enumerate_for_length_distance(*args)


def sweep_length_distance(q: int, pairs, budget=None, workers: int = 1) -> list[DiscoveryRecord]:
    """enumerate_for_length_distance over many (n, d); output order is fixed."""
    jobs = [(q, n, d, budget) for n, d in pairs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_enumerate_pair, jobs))
    else:
        chunks = [_enumerate_pair(j) for j in jobs]
    return sorted((r for chunk in chunks for r in chunk), key=DiscoveryRecord.sort_key)


def distinct_c_bound(spec: FamilySpec) -> Fraction:
    """k_1 (n - k - 2) / q, minus t for punctured families."""
    return Fraction(spec.k_1 * (spec.n - spec.k - 2), spec.q) - spec.t


def family_records(spec: FamilySpec, budget=None) -> list[DiscoveryRecord]:
    C, report = build_family(spec)
    _verify_mds(C, budget)
    return level_records(C, spec.n - spec.k + 1, spec.family, spec.to_json())


def count_distinct_c(q: int, n: int, k: int, spec: FamilySpec | None = None, budget=None) -> int:
    """Distinct nonzero c among MDS EAQEC records over all hull levels."""
    if spec is None:
        spec = choose_family_spec(q, n, k)
        if spec is None:
            raise PreconditionError(f"no subgroup or coset family has length {n} over GF({q * q})")
    if (spec.q, spec.n, spec.k) != (q, n, k):
        raise PreconditionError("spec does not match (q, n, k)")
    records = family_records(spec, budget)
    return len({r.eaqec.c for r in records if r.mds and r.eaqec.c > 0})


def length_distance_pairs(q: int, n_max: int | None = None, n_min: int = 2):
    """Every (n, d) with n_min <= n <= n_max and 2 <= d <= (n + 2) / 2."""
    n_max = q * q + 1 if n_max is None else n_max
    return [(n, d) for n in range(n_min, n_max + 1) for d in range(2, (n + 2) // 2 + 1)]
