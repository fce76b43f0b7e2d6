"""Reed-Solomon families with large Hermitian hulls.

Three constructions, all MDS:

* ``subgroup``: RS evaluated on the order-n subgroup of GF(q^2)*, rescaled
  by the inverse derivative vector and conjugated so that its Hermitian
  dual is the plain RS(n, n - k).
* ``coset``: the same idea on a union of v cosets b_i G with b_i in GF(q)*.
* ``punctured-coset``: a coset code with its last t coordinates deleted.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BadDimension, CosetCollision, DuplicatePoint, NotADivisor, PreconditionError
from .exactla import row_basis, GfMatrix
from .field import FieldTower, tower_for_q
from .lincode import HullReport, LinearCode, frobenius_image, hermitian_hull, puncture, scale

FAMILIES = ("subgroup", "coset", "punctured-coset")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    q: int
    n: int
    k: int
    n_1: int | None = None
    v: int | None = None
    b: tuple[int, ...] = ()
    t: int = 0
    k_1: int = field(init=False)
    k_2: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        k_1, k_2 = divmod(self.k, self.q)
        object.__setattr__(self, "k_1", k_1)
        object.__setattr__(self, "k_2", k_2)

    @property
    def tower(self) -> FieldTower:
        return tower_for_q(self.q)

    def validate(self):
        """Raise PreconditionError unless the spec describes a family member."""
        q, n, k = self.q, self.n, self.k
        Q = q * q
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")
        if not 1 <= k <= n:
            raise BadDimension(f"need 1 <= k <= n, got k={k}, n={n}")
        if 2 * k < n:
            raise PreconditionError(f"need k >= n/2, got k={k}, n={n}")
        if self.family == "subgroup":
            if (Q - 1) % n:
                raise NotADivisor(f"{n} does not divide {Q - 1}")
            return
        n_1, v = self.n_1, self.v
        if n_1 is None or v is None:
            raise PreconditionError("coset families need n_1 and v")
        if self.k_1 > q - 1:
            raise PreconditionError(f"k={k} has k_1={self.k_1} > q-1")
        if (Q - 1) % n_1:
            raise NotADivisor(f"{n_1} does not divide {Q - 1}")
        if math.gcd(n_1, q - 1) != 1:
            raise PreconditionError(f"gcd(n_1={n_1}, q-1={q - 1}) != 1, cosets would collide")
        if not 1 <= v <= q - 1 or len(self.b) != v:
            raise PreconditionError(f"need 1 <= v <= q-1 representatives, got v={v}, b={self.b}")
        t = self.t if self.family == "punctured-coset" else 0
        if self.family == "coset" and self.t:
            raise PreconditionError("t must be 0 for the unpunctured coset family")
        if n != v * n_1 - t:
            raise PreconditionError(f"n={n} must equal v*n_1 - t = {v * n_1 - t}")
        if not 0 <= t < n - k + 1:
            raise PreconditionError(f"need 0 <= t < n-k+1, got t={t}")

    def printed_condition(self) -> bool:
        """The hypothesis (q+1) | n_1 exactly as the family is usually stated."""
        return self.n_1 is not None and self.n_1 % (self.q + 1) == 0

    def to_json(self) -> dict:
        out = asdict(self)
        out["b"] = list(self.b)
        return out


def multiplier_u(t: FieldTower, points) -> np.ndarray:
    """u_i = prod_{j != i} (a_i - a_j), i.e. h'(a_i) for h = prod (x - a_j)."""
    a = np.asarray(points, dtype=np.int64)
    if len(a) == 0:
        raise PreconditionError("need at least one point")
    if len(set(a.tolist())) != len(a):
        raise DuplicatePoint("evaluation points must be distinct")
    diff = t.sub(a[:, None], a[None, :])
    np.fill_diagonal(diff, 1)
    u = np.ones(len(a), dtype=np.int64)
    for j in range(len(a)):
        u = t.mul(u, diff[:, j])
    return u


def rs_eval(t: FieldTower, points, k: int, multipliers=None) -> LinearCode:
    """GRS code with rows (m_i a_i^j), j = 0..k-1."""
    a = np.asarray(points, dtype=np.int64)
    n = len(a)
    if not 1 <= k <= n:
        raise BadDimension(f"need 1 <= k <= n, got k={k}, n={n}")
    m = np.ones(n, dtype=np.int64) if multipliers is None else np.asarray(multipliers, dtype=np.int64)
    if np.any(m == 0):
        raise PreconditionError("multipliers must be nonzero")
    rows = np.array([t.mul(m, t.pow(a, j)) for j in range(k)])
    return LinearCode.from_generator(t, rows, n)


def count_common_monomials(q: int, n: int, expo_I, expo_J) -> int:
    """|{j in I : (j q mod n) in J}|, exponents taken modulo n."""
    if n < 1:
        raise PreconditionError("n must be positive")
    J = {j % n for j in expo_J}
    return sum(1 for j in expo_I if (j * q) % n in J)


def subgroup_candidate(t: FieldTower, n: int, k: int) -> tuple[LinearCode, HullReport]:
    """(U^-1 . RS(n, k))^q on the order-n subgroup.

    Its Hermitian dual is exactly RS(n, n - k); the hull contains every
    monomial x^(jq mod n), 1 <= j <= k, whose exponent is below n - k.
    """
    FamilySpec("subgroup", t.q, n, k).validate()
    a = t.subgroup(n)
    u = multiplier_u(t, a)
    C = frobenius_image(rs_eval(t, a, k, t.inv(u)))
    count = count_common_monomials(t.q, n, range(1, k + 1), range(0, n - k))
    report = hermitian_hull(C).with_bounds(Fraction(k * (n - k - 2), t.q**2), count)
    return C, report


def coset_points(t: FieldTower, n_1: int, b) -> np.ndarray:
    """Union of the cosets b_i G of the order-n_1 subgroup G, coset by coset."""
    G = t.subgroup(n_1)
    b = [int(x) for x in b]
    if len(set(b)) != len(b):
        raise DuplicatePoint("coset representatives must be distinct")
    for x in b:
        if x == 0 or not t.in_subfield(x):
            raise PreconditionError(f"representative {x} is not in GF(q)*")
    pts = np.concatenate([t.mul(x, G) for x in b]) if b else np.zeros(0, dtype=np.int64)
    if len(set(pts.tolist())) != len(pts):
        raise CosetCollision(f"cosets of the order-{n_1} subgroup by {b} are not disjoint")
    return pts


def coset_factor(t: FieldTower, n_1: int, b) -> np.ndarray:
    """B_i = prod_{j != i'} (b_i'^n_1 - b_j^n_1) for a point in coset i'.

    These lie in GF(q)* and satisfy h'(a) = n_1 a^(n_1 - 1) B.
    """
    bn = t.pow(np.asarray(b, dtype=np.int64), n_1)
    per_coset = []
    for i in range(len(bn)):
        acc = 1
        for j in range(len(bn)):
            if j != i:
                acc = t.mul(acc, t.sub(int(bn[i]), int(bn[j])))
        per_coset.append(acc)
    return np.repeat(np.asarray(per_coset, dtype=np.int64), n_1)


def _coset_code(spec: FamilySpec) -> LinearCode:
    t = spec.tower
    a = coset_points(t, spec.n_1, spec.b)
    h1 = t.mul(spec.n_1 % t.p, t.pow(a, spec.n_1 - 1))
    B = coset_factor(t, spec.n_1, spec.b)
    eta = np.array([t.norm_preimage(int(x)) for x in B], dtype=np.int64)
    assert np.array_equal(t.norm(eta), B)
    inner = frobenius_image(rs_eval(t, a, spec.k, t.inv(h1)))
    return scale(inner, t.div(eta, B))


def coset_candidate(spec: FamilySpec) -> tuple[LinearCode, HullReport]:
    """(eta / B) . ((h_1')^-1 . RS(n, k))^q on a union of cosets.

    eta_i is the smallest element of norm B_i, so eta / B = eta^-q and the
    Hermitian dual is eta^-q . RS(n, n - k).
    """
    if spec.family != "coset":
        raise PreconditionError(f"expected a coset spec, got {spec.family!r}")
    spec.validate()
    C = _coset_code(spec)
    claimed = Fraction(spec.k_1 * (spec.n - spec.k - 2), spec.q)
    return C, hermitian_hull(C).with_bounds(claimed)


def punctured_candidate(spec: FamilySpec) -> tuple[LinearCode, HullReport]:
    """Coset code on v*n_1 points with the last t coordinates deleted."""
    if spec.family not in ("punctured-coset", "coset"):
        raise PreconditionError(f"expected a punctured-coset spec, got {spec.family!r}")
    spec.validate()
    parent = FamilySpec("coset", spec.q, spec.v * spec.n_1, spec.k, spec.n_1, spec.v, spec.b)
    P = _coset_code(parent)
    C = puncture(P, range(parent.n - spec.t, parent.n)) if spec.t else P
    claimed = Fraction(spec.k_1 * (spec.n - spec.k - 2), spec.q) - spec.t
    return C, hermitian_hull(C).with_bounds(max(claimed, Fraction(0)))


def build_family(spec: FamilySpec) -> tuple[LinearCode, HullReport]:
    if spec.family == "subgroup":
        return subgroup_candidate(spec.tower, spec.n, spec.k)
    if spec.family == "coset":
        return coset_candidate(spec)
    return punctured_candidate(spec)


def valid_coset_orders(q: int) -> list[int]:
    """Divisors n_1 of q^2 - 1 whose subgroup meets GF(q)* only in 1."""
    return [d for d in range(1, q * q) if (q * q - 1) % d == 0 and math.gcd(d, q - 1) == 1]


def default_representatives(t: FieldTower, v: int) -> tuple[int, ...]:
    """First v elements of GF(q)* in encoding order."""
    return tuple(int(x) for x in t.subfield()[1: v + 1])


def rs_code(t: FieldTower, points, k: int) -> LinearCode:
    """Plain RS(n, k) on the given points (all-ones multipliers)."""
    return rs_eval(t, points, k)


def extended_rs(t: FieldTower, k: int) -> LinearCode:
    """Length q^2 + 1 RS code: every field element plus the point at infinity.

    The infinity column picks out the coefficient of x^(k-1).
    """
    a = t.elements
    rows = np.array([t.pow(a, j) for j in range(k)])
    inf = np.zeros((k, 1), dtype=np.int64)
    inf[k - 1, 0] = 1
    return LinearCode(row_basis(GfMatrix(t, np.hstack([rows, inf]))))
