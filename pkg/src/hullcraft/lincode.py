"""Linear codes over GF(q^2): duals, Hermitian hulls, equivalence, distance."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, ParseError, PreconditionError, ZeroScalar
from .exactla import GfMatrix, matmul, nullspace, row_basis, rowspace_meet, transpose
from .field import FieldTower, parse_header

DEFAULT_BUDGET = 2_000_000
_BLOCK = 1 << 16


def default_budget() -> int:
    env = os.environ.get("HULLCRAFT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k] code stored by its RREF generator matrix.

    Build with :meth:`from_generator`; the constructor assumes ``gen`` is
    already a full-rank RREF matrix.
    """

    gen: GfMatrix

    @classmethod
    def from_generator(cls, tower: FieldTower, rows, n: int | None = None) -> "LinearCode":
        a = np.asarray(rows, dtype=np.int64)
        if a.size == 0:
            if n is None:
                n = a.shape[-1] if a.ndim == 2 else 0
            a = np.zeros((0, n), dtype=np.int64)
        elif a.ndim == 1:
            a = a[None, :]
        return cls(row_basis(GfMatrix(tower, a)))

    @classmethod
    def full_space(cls, tower, n):
        return cls(GfMatrix.identity(tower, n))

    @classmethod
    def zero_code(cls, tower, n):
        return cls(GfMatrix.zeros(tower, 0, n))

    @property
    def tower(self) -> FieldTower:
        return self.gen.tower

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.tower.order}))"

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64)[None, :]
        return row_basis(GfMatrix(self.tower, np.vstack([self.gen.entries, w]))).rows == self.k

    def to_text(self) -> str:
        return f"{self.tower.header()}\n{self.n} {self.k}\n{self.gen.to_text()}"

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) < 2:
            raise ParseError("code text needs a field header and an 'n k' line")
        tower = parse_header(lines[0])
        try:
            n, k = (int(x) for x in lines[1].split())
        except ValueError as exc:
            raise ParseError(f"bad 'n k' line: {lines[1]!r}") from exc
        M = GfMatrix.from_text(tower, "\n".join(lines[2:]))
        if M.cols != n or M.rows != k:
            raise ParseError(f"generator is {M.rows}x{M.cols}, header says n={n} k={k}")
        code = cls.from_generator(tower, M.entries, n)
        if code.k != k:
            raise ParseError(f"generator has rank {code.k}, header says k={k}")
        return code


@dataclass(frozen=True)
class HullReport:
    """Oracle hull dimension plus whatever lower bounds a constructor claims."""

    hull_dim: int
    hull_basis: GfMatrix
    bound_claimed: Fraction | None = None
    bound_count: int | None = None
    oracle_ok: bool | None = None

    def with_bounds(self, claimed: Fraction | None, count: int | None = None) -> "HullReport":
        ok = True
        if claimed is not None:
            ok = ok and self.hull_dim >= math.ceil(claimed)
        if count is not None:
            ok = ok and self.hull_dim >= count
        return HullReport(self.hull_dim, self.hull_basis, claimed, count, ok)


def frobenius_image(C: LinearCode) -> LinearCode:
    """C^q, the component-wise q-power image."""
    return LinearCode.from_generator(C.tower, C.tower.frob(C.gen.entries), C.n)


def euclidean_dual(C: LinearCode) -> LinearCode:
    return LinearCode(nullspace(C.gen))


def hermitian_dual(C: LinearCode) -> LinearCode:
    return frobenius_image(euclidean_dual(C))


def hermitian_hull(C: LinearCode) -> HullReport:
    H = rowspace_meet(C.gen, hermitian_dual(C).gen)
    return HullReport(H.rows, H)


def hull_dim(C: LinearCode) -> int:
    return hermitian_hull(C).hull_dim


def hermitian_inner(t: FieldTower, x, y):
    """sum_i x_i y_i^q"""
    return _sum(t, t.mul(np.asarray(x, dtype=np.int64), t.frob(np.asarray(y, dtype=np.int64))))


def _sum(t: FieldTower, v) -> int:
    acc = 0
    for x in np.asarray(v).ravel():
        acc = t.add(acc, int(x))
    return acc


def scale(C: LinearCode, v) -> LinearCode:
    """v . C: column i of the generator multiplied by v_i."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (C.n,):
        raise DimensionMismatch(f"scaling vector has length {len(v)}, code length is {C.n}")
    if np.any(v == 0):
        raise ZeroScalar("scaling vector must have full Hamming weight")
    return LinearCode.from_generator(C.tower, C.tower.mul(C.gen.entries, v[None, :]), C.n)


def _check_positions(C, S):
    S = sorted(set(int(s) for s in S))
    if S and (S[0] < 0 or S[-1] >= C.n):
        raise PreconditionError(f"positions {S} outside [0, {C.n})")
    return S


def puncture(C: LinearCode, S) -> LinearCode:
    """Delete the coordinates in S."""
    S = _check_positions(C, S)
    keep = [i for i in range(C.n) if i not in set(S)]
    return LinearCode.from_generator(C.tower, C.gen.entries[:, keep], len(keep))


def shorten(C: LinearCode, S) -> LinearCode:
    """Codewords vanishing on S, with those coordinates deleted."""
    S = _check_positions(C, S)
    keep = [i for i in range(C.n) if i not in set(S)]
    if not S:
        return C
    if C.k == 0:
        return LinearCode.zero_code(C.tower, len(keep))
    msgs = nullspace(transpose(GfMatrix(C.tower, C.gen.entries[:, S])))
    if msgs.rows == 0:
        return LinearCode.zero_code(C.tower, len(keep))
    words = matmul(msgs, C.gen).entries
    return LinearCode.from_generator(C.tower, words[:, keep], len(keep))


# ---------------------------------------------------------------------------
# minimum distance and the MDS property
# ---------------------------------------------------------------------------

def _span(t: FieldTower, rows: np.ndarray) -> np.ndarray:
    """All F-linear combinations of ``rows`` (r x n), shape (Q^r, n)."""
    elems = t.elements
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for r in rows:
        out = t.add(out[None, :, :], t.mul(elems[:, None, None], r[None, None, :])).reshape(-1, rows.shape[1])
    return out


def min_distance(C: LinearCode, budget: int | None = None) -> int:
    """Exact minimum weight by exhaustive enumeration of the code.

    Only messages whose first nonzero entry is 1 are visited, which covers
    every codeword up to a nonzero scalar.
    """
    if budget is None:
        budget = default_budget()
    if C.k < 1:
        raise PreconditionError("minimum distance of the zero code is undefined")
    t, G, k = C.tower, C.gen.entries, C.k
    Q = t.order
    required = Q**k - 1
    if required > budget:
        raise BudgetExceeded(required, budget)
    tail = 0
    while tail < k - 1 and Q ** (tail + 1) <= _BLOCK:
        tail += 1
    T = _span(t, G[k - tail:]) if tail else np.zeros((1, C.n), dtype=np.int64)
    best = C.n
    for lead in range(k):
        mid_rows = G[lead + 1: k - tail] if lead + 1 < k - tail else G[:0]
        tail_here = T if lead < k - tail else _span(t, G[lead + 1:])
        for coeffs in itertools.product(range(Q), repeat=len(mid_rows)):
            base = G[lead].copy()
            for c, r in zip(coeffs, mid_rows):
                if c:
                    base = t.add(base, t.mul(c, r))
            words = t.add(tail_here, base[None, :])
            w = int(np.count_nonzero(words, axis=1).min())
            if w < best:
                best = w
    return best


def _batched_nonsingular(t: FieldTower, M: np.ndarray) -> bool:
    """True iff every matrix in the stack M (B x s x s) is invertible."""
    M = M.copy()
    B, s, _ = M.shape
    idx = np.arange(B)
    for c in range(s):
        nz = M[:, c:, c] != 0
        if not nz.any(axis=1).all():
            return False
        piv = c + nz.argmax(axis=1)
        row_c = M[idx, c].copy()
        M[idx, c] = M[idx, piv]
        M[idx, piv] = row_c
        if c + 1 == s:
            break
        f = t.mul(M[:, c + 1:, c], t.inv(M[:, c, c])[:, None])
        M[:, c + 1:, c:] = t.sub(M[:, c + 1:, c:], t.mul(f[:, :, None], M[:, None, c, c:]))
    return True


def all_column_subsets_nonsingular(C: LinearCode) -> bool:
    """Every k columns of the generator are independent.

    With the generator in systematic form [I | A] (up to column order), this
    is equivalent to every square submatrix of A being nonsingular.
    """
    t, k, n = C.tower, C.k, C.n
    if k == 0 or k == n:
        return True
    pivots = [int(np.flatnonzero(row)[0]) for row in C.gen.entries]
    others = [c for c in range(n) if c not in set(pivots)]
    A = C.gen.entries[:, others]
    for s in range(1, min(k, n - k) + 1):
        rsets = np.array(list(itertools.combinations(range(k), s)), dtype=np.int64)
        csets = np.array(list(itertools.combinations(range(n - k), s)), dtype=np.int64)
        step = max(1, (1 << 20) // (len(csets) * s * s))
        for lo in range(0, len(rsets), step):
            R = rsets[lo: lo + step]
            sub = A[R[:, None, :, None], csets[None, :, None, :]].reshape(-1, s, s)
            if not _batched_nonsingular(t, sub):
                return False
    return True


def is_mds(C: LinearCode, budget: int | None = None) -> bool:
    """d = n - k + 1, decided by whichever exact test fits the budget.

    Order of preference: the k-column-subset test, then exhaustive distance
    of C, then exhaustive distance of the dual (C is MDS iff its dual is).
    """
    if budget is None:
        budget = default_budget()
    n, k, Q = C.n, C.k, C.tower.order
    if k == 0 or k == n:
        return True
    subsets = math.comb(n, k)
    if subsets <= budget:
        return all_column_subsets_nonsingular(C)
    if Q**k - 1 <= budget:
        return min_distance(C, budget) == n - k + 1
    if Q ** (n - k) - 1 <= budget:
        return min_distance(euclidean_dual(C), budget) == k + 1
    raise BudgetExceeded(min(subsets, Q**k - 1, Q ** (n - k) - 1), budget)
