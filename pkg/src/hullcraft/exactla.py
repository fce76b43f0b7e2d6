"""Dense exact linear algebra over GF(q^2).

All bases returned here are in reduced row echelon form, so two subspaces
are equal exactly when their returned bases are equal as matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ParseError
from .field import FieldTower


@dataclass(frozen=True, eq=False)
class GfMatrix:
    """Row-major matrix of field elements owned by one tower."""

    tower: FieldTower
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64, copy=True)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= self.tower.order):
            raise ParseError("entry outside the field")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, tower, rows, cols):
        return cls(tower, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, tower, n):
        return cls(tower, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __eq__(self, other):
        if not isinstance(other, GfMatrix):
            return NotImplemented
        return (
            self.tower == other.tower
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.tower, self.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"GfMatrix({self.rows}x{self.cols}, {self.entries.tolist()})"

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, tower, text: str) -> "GfMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty matrix text")
        try:
            rows, cols = (int(x) for x in lines[0].split())
            data = [[int(x) for x in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ParseError(f"matrix body does not match declared shape {rows}x{cols}")
        return cls(tower, np.array(data, dtype=np.int64).reshape(rows, cols))


def _check_same(a: GfMatrix, b: GfMatrix):
    if a.tower != b.tower:
        raise DimensionMismatch("matrices live in different fields")
    if a.cols != b.cols:
        raise DimensionMismatch(f"column counts differ: {a.cols} vs {b.cols}")


def rref(M: GfMatrix) -> tuple[GfMatrix, int, list[int]]:
    """Reduced row echelon form by leftmost-pivot, topmost-row elimination.

    Returns ``(R, rank, pivots)``; R keeps M's shape, zero rows at the bottom.
    """
    t = M.tower
    R = M.entries.copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if not len(nz):
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        if R[r, c] != 1:
            R[r] = t.mul(R[r], t.inv(int(R[r, c])))
        col = R[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if len(others):
            R[others] = t.sub(R[others], t.mul(col[others, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return GfMatrix(t, R), r, pivots


def rank(M: GfMatrix) -> int:
    return rref(M)[1]


def row_basis(M: GfMatrix) -> GfMatrix:
    """RREF with the zero rows dropped."""
    R, r, _ = rref(M)
    return GfMatrix(M.tower, R.entries[:r])


def nullspace(M: GfMatrix) -> GfMatrix:
    """Basis (RREF rows) of {x : M x^T = 0}."""
    t = M.tower
    R, r, pivots = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        if r:
            basis[i, pivots] = t.neg(R.entries[:r, f])
    return row_basis(GfMatrix(t, basis))


def stack(A: GfMatrix, B: GfMatrix) -> GfMatrix:
    _check_same(A, B)
    return GfMatrix(A.tower, np.vstack([A.entries, B.entries]))


def transpose(M: GfMatrix) -> GfMatrix:
    return GfMatrix(M.tower, M.entries.T)


def matmul(A: GfMatrix, B: GfMatrix) -> GfMatrix:
    if A.tower != B.tower or A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    t = A.tower
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    for j in range(A.cols):
        out = t.add(out, t.mul(A.entries[:, j, None], B.entries[None, j, :]))
    return GfMatrix(t, out)


def rowspace_meet(A: GfMatrix, B: GfMatrix) -> GfMatrix:
    """Basis of rowspace(A) intersected with rowspace(B).

    Solves x A + y B = 0 through the kernel of the stacked system; each
    solution contributes x A to the intersection.
    """
    _check_same(A, B)
    t = A.tower
    if A.rows == 0 or B.rows == 0:
        return GfMatrix.zeros(t, 0, A.cols)
    K = nullspace(transpose(stack(A, B)))
    if K.rows == 0:
        return GfMatrix.zeros(t, 0, A.cols)
    X = GfMatrix(t, K.entries[:, : A.rows])
    return row_basis(matmul(X, A))


def same_rowspace(A: GfMatrix, B: GfMatrix) -> bool:
    return row_basis(A) == row_basis(B)
