"""Twisted Reed-Solomon codes on a multiplicative subgroup.

C(alpha, eta, k) evaluates span{1 + eta x^k, x, ..., x^(k-1)} on the
order-n subgroup alpha.  Its Euclidean dual is U^-1 times the evaluation of
span{1, x, ..., x^(n-k-2), x^(n-k-1) - eta x^(n-1)}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadSpec, PreconditionError
from .field import FieldTower, tower_for_q
from .lincode import HullReport, LinearCode, euclidean_dual, frobenius_image, hermitian_hull, is_mds, scale
from .rsfam import multiplier_u


@dataclass(frozen=True)
class TwistSpec:
    q: int
    n: int
    k: int
    eta: int

    @property
    def tower(self) -> FieldTower:
        return tower_for_q(self.q)

    @property
    def alpha(self) -> np.ndarray:
        return self.tower.subgroup(self.n)

    def validate(self):
        Q = self.q * self.q
        if self.n < 2 or (Q - 1) % self.n:
            raise BadSpec(f"{self.n} does not divide {Q - 1}")
        if not 1 <= self.k <= self.n - 1:
            raise BadSpec(f"need 1 <= k <= n-1, got k={self.k}")
        if not 0 < self.eta < Q:
            raise BadSpec(f"eta must be a nonzero element, got {self.eta}")

    def with_eta(self, eta: int) -> "TwistSpec":
        return TwistSpec(self.q, self.n, self.k, eta)

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "k": self.k, "eta": self.eta}


def _eval(t, alpha, polys):
    """polys: list of {exponent: coefficient}"""
    rows = []
    for poly in polys:
        row = np.zeros(len(alpha), dtype=np.int64)
        for e, c in poly.items():
            row = t.add(row, t.mul(c, t.pow(alpha, e)))
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(polys), len(alpha))


def twisted_polys(spec: TwistSpec):
    return [{0: 1, spec.k: spec.eta}] + [{j: 1} for j in range(1, spec.k)]


def dual_polys(spec: TwistSpec):
    t, n, k = spec.tower, spec.n, spec.k
    top = {n - k - 1: 1}
    top[n - 1] = t.add(top.get(n - 1, 0), t.neg(spec.eta))
    return [{i: 1} for i in range(n - k - 1)] + [top]


def twisted_code(spec: TwistSpec) -> LinearCode:
    spec.validate()
    t = spec.tower
    C = LinearCode.from_generator(t, _eval(t, spec.alpha, twisted_polys(spec)), spec.n)
    assert C.k == spec.k
    return C


def twisted_dual_basis(spec: TwistSpec) -> LinearCode:
    spec.validate()
    t = spec.tower
    return LinearCode.from_generator(t, _eval(t, spec.alpha, dual_polys(spec)), spec.n)


def duality_signs(spec: TwistSpec) -> dict[str, bool]:
    """Which sign of eta in the h-basis makes U^-1 . span(h) the dual.

    ``as_displayed`` uses h_(n-k-1) = x^(n-k-1) - eta x^(n-1); ``negated``
    flips eta first.
    """
    spec.validate()
    t = spec.tower
    dual = euclidean_dual(twisted_code(spec))
    uinv = t.inv(multiplier_u(t, spec.alpha))
    return {
        "as_displayed": dual == scale(twisted_dual_basis(spec), uinv),
        "negated": dual == scale(twisted_dual_basis(spec.with_eta(t.neg(spec.eta))), uinv),
    }


def check_twisted_duality(spec: TwistSpec) -> bool:
    return duality_signs(spec)["as_displayed"]


def is_twisted_mds(spec: TwistSpec, budget: int | None = None) -> bool:
    return is_mds(twisted_code(spec), budget)


def eta_in_alpha(spec: TwistSpec) -> bool:
    return spec.eta in set(spec.alpha.tolist())


def twisted_bound_count(q: int, n: int, k: int) -> int:
    """|{1 <= j <= k : 1 <= jq mod n <= n-k-2}|, the count as usually stated.

    The j = 1 term comes from the twisted row, which is not a monomial, so
    this can overshoot the hull; see :func:`twisted_monomial_count`.
    """
    return sum(1 for j in range(1, k + 1) if 1 <= (j * q) % n <= n - k - 2)


def twisted_monomial_count(q: int, n: int, k: int) -> int:
    """Monomials shared by the hull candidate and its Hermitian dual.

    On a subgroup U^-1 is a multiple of x, so the pure rows of the candidate
    are x^(jq) for 2 <= j <= k; the dual's pure rows are x^0 .. x^(n-k-2).
    Distinct shared exponents give independent hull vectors, so this is a
    proven lower bound on the hull dimension.
    """
    return sum(1 for j in range(2, k + 1) if (j * q) % n <= n - k - 2)


def twisted_hull_candidate(spec: TwistSpec) -> tuple[LinearCode, HullReport]:
    """(U^-1 . C(alpha, eta, k))^q, whose Hermitian dual is the h-basis code."""
    spec.validate()
    n, k = spec.n, spec.k
    if 2 * k < n:
        raise PreconditionError(f"need k >= n/2, got k={k}, n={n}")
    t = spec.tower
    uinv = t.inv(multiplier_u(t, spec.alpha))
    C = frobenius_image(scale(twisted_code(spec), uinv))
    claimed = Fraction(k * (n - k - 2), spec.q**2)
    return C, hermitian_hull(C).with_bounds(claimed, twisted_bound_count(spec.q, n, k))


def schur_square(C: LinearCode) -> LinearCode:
    """Span of coordinate-wise products of all pairs of generator rows."""
    t, G = C.tower, C.gen.entries
    prods = [t.mul(G[i], G[j]) for i, j in itertools.combinations_with_replacement(range(C.k), 2)]
    return LinearCode.from_generator(t, np.array(prods, dtype=np.int64).reshape(-1, C.n), C.n)


def schur_square_dim(C: LinearCode) -> int:
    return schur_square(C).k


def all_specs(q: int, n: int, k: int):
    """Every valid TwistSpec for fixed (q, n, k), one per nonzero eta."""
    for eta in range(1, q * q):
        yield TwistSpec(q, n, k, eta)
