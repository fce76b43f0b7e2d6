"""Shrinking a Hermitian hull by coordinate scaling.

Scaling the pivot coordinates of some hull basis rows by elements whose
norm is not 1 removes exactly those rows from the hull.  Every result is
re-checked against the hull oracle; when the direct plan misses the target
a greedy one-coordinate-at-a-time search takes over.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import NonOrthonormalizable, PreconditionError, ReductionFailed, TargetTooLarge, UnsupportedField
from .exactla import GfMatrix, rref
from .lincode import LinearCode, hermitian_hull, hull_dim, scale

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardForm:
    """Generator [[I_l, 0, P], [0, I_(k-l), Q]] of the permuted code.

    ``perm[j]`` is the original coordinate now sitting at position j.
    P and Q are split after their first l columns into (P1, P2), (Q1, Q2).
    """

    code: LinearCode
    perm: tuple[int, ...]
    l: int
    generator: np.ndarray
    P1: np.ndarray
    P2: np.ndarray
    Q1: np.ndarray
    Q2: np.ndarray

    @property
    def P(self):
        return np.hstack([self.P1, self.P2])

    @property
    def Q(self):
        return np.hstack([self.Q1, self.Q2])


@dataclass(frozen=True)
class ScalingPlan:
    lambdas: tuple[int, ...]
    positions: tuple[int, ...]
    l_target: int

    def vector(self, n: int) -> np.ndarray:
        v = np.ones(n, dtype=np.int64)
        v[list(self.positions)] = self.lambdas
        return v

    def to_json(self) -> dict:
        return {"positions": list(self.positions), "lambda_encodings": list(self.lambdas)}


def _conj_transpose(t, M):
    return t.frob(M).T


def _gf_matmul(t, A, B):
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = t.add(out, t.mul(A[:, j, None], B[None, j, :]))
    return out


def standard_form(C: LinearCode) -> StandardForm:
    """Put the generator into block form with the hull rows first.

    Needs k - l coordinates on which every hull row vanishes and the
    complement of the hull is invertible; raises NonOrthonormalizable when
    no such coordinates exist.
    """
    t, n, k = C.tower, C.n, C.k
    H = hermitian_hull(C).hull_basis.entries
    l = H.shape[0]
    hull_piv = [int(np.flatnonzero(row)[0]) for row in H]
    # complement: codewords vanishing on the hull pivots
    G = C.gen.entries.copy()
    for i, p in enumerate(hull_piv):
        G = t.sub(G, t.mul(G[:, p, None], H[i][None, :]))
    K, r, _ = rref(GfMatrix(t, G))
    K = K.entries[:r]
    if r != k - l:
        raise AssertionError("hull complement has the wrong dimension")
    zero_cols = [c for c in range(n) if c not in hull_piv and not np.any(H[:, c])]
    if k - l:
        Kz, rz, piv_z = rref(GfMatrix(t, K[:, zero_cols]))
        if rz < k - l:
            raise NonOrthonormalizable(
                f"hull rows vanish on only {len(zero_cols)} coordinates; "
                f"the complement has rank {rz} < {k - l} there"
            )
        comp_piv = [zero_cols[c] for c in piv_z]
        # row-reduce K so it is the identity on comp_piv
        Kr, _, _ = rref(GfMatrix(t, np.hstack([K[:, comp_piv], K])))
        K = Kr.entries[:, len(comp_piv):]
    else:
        comp_piv = []
    used = set(hull_piv) | set(comp_piv)
    perm = tuple(hull_piv + comp_piv + [c for c in range(n) if c not in used])
    gen = np.vstack([H, K])[:, list(perm)] if k else np.zeros((0, n), dtype=np.int64)
    P = gen[:l, k:]
    Q = gen[l:, k:]
    minus_identity = np.where(np.eye(l, dtype=bool), t.neg(1), 0)
    if l and not np.array_equal(_gf_matmul(t, P, _conj_transpose(t, P)), minus_identity):
        raise NonOrthonormalizable("P P^H != -I for the hull block")
    permuted = LinearCode.from_generator(t, gen, n)
    return StandardForm(permuted, perm, l, gen, P[:, :l], P[:, l:], Q[:, :l], Q[:, l:])


def smallest_non_unit_norm(t) -> int:
    """Smallest nonzero element whose norm is not 1."""
    e = t.elements[1:]
    return int(e[np.flatnonzero(t.norm(e) != 1)[0]])


def _candidate_lambdas(t):
    e = t.elements[1:]
    return [int(x) for x in e[t.norm(e) != 1]]


def reduce_hull(C: LinearCode, l_target: int) -> tuple[LinearCode, ScalingPlan]:
    """Equivalent code v . C whose Hermitian hull has dimension l_target."""
    t = C.tower
    if t.q < 3:
        raise UnsupportedField("hull reduction needs q >= 3")
    report = hermitian_hull(C)
    l = report.hull_dim
    if l_target < 0:
        raise PreconditionError("target hull dimension must be non-negative")
    if l_target > l:
        raise TargetTooLarge(f"target {l_target} exceeds hull dimension {l}")
    if l_target == l:
        return C, ScalingPlan((), (), l_target)

    lam = smallest_non_unit_norm(t)
    pivots = [int(np.flatnonzero(row)[0]) for row in report.hull_basis.entries]
    plan = ScalingPlan((lam,) * (l - l_target), tuple(pivots[: l - l_target]), l_target)
    D = scale(C, plan.vector(C.n))
    if hull_dim(D) == l_target:
        return D, plan

    log.debug("pivot scaling missed target %d; falling back to greedy search", l_target)
    return _greedy_reduce(C, l, l_target, pivots)


def _greedy_reduce(C, l, l_target, pivots):
    t = C.tower
    lambdas = _candidate_lambdas(t)
    v = np.ones(C.n, dtype=np.int64)
    current, h = C, l
    order = pivots + [c for c in range(C.n) if c not in set(pivots)]
    while h > l_target:
        for pos in order:
            if v[pos] != 1:
                continue
            hit = None
            for lam in lambdas:
                trial = v.copy()
                trial[pos] = lam
                D = scale(C, trial)
                if hull_dim(D) == h - 1:
                    hit = trial, D
                    break
            if hit:
                v, current = hit
                h -= 1
                break
        else:
            raise ReductionFailed(f"could not lower hull dimension below {h} (target {l_target})")
    positions = tuple(int(i) for i in np.flatnonzero(v != 1))
    return current, ScalingPlan(tuple(int(v[i]) for i in positions), positions, l_target)
