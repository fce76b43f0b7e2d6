"""Independent reference computations used only by the tests."""

import itertools

import numpy as np

from hullcraft.exactla import GfMatrix, rank
from hullcraft.lincode import LinearCode


def gram_hull_dim(C: LinearCode) -> int:
    """k - rank(G conj(G)^T); avoids the nullspace/meet path entirely."""
    t, G = C.tower, C.gen.entries
    if C.k == 0:
        return 0
    Gc = t.frob(G)
    gram = np.zeros((C.k, C.k), dtype=np.int64)
    for j in range(C.n):
        gram = t.add(gram, t.mul(G[:, j, None], Gc[None, :, j]))
    return C.k - rank(GfMatrix(t, gram))


def brute_distance(C: LinearCode) -> int:
    """Minimum weight over every nonzero message, one codeword at a time."""
    t, G = C.tower, C.gen.entries
    best = C.n
    for msg in itertools.product(range(t.order), repeat=C.k):
        if not any(msg):
            continue
        w = np.zeros(C.n, dtype=np.int64)
        for c, row in zip(msg, G):
            w = t.add(w, t.mul(c, row))
        best = min(best, int(np.count_nonzero(w)))
    return best


def orthogonal(t, A, B, hermitian=False):
    """Every row of A is orthogonal to every row of B."""
    if hermitian:
        B = t.frob(B)
    for a in A:
        for b in B:
            acc = 0
            for x, y in zip(a, b):
                acc = t.add(acc, t.mul(int(x), int(y)))
            if acc:
                return False
    return True


def random_code(t, n, k, rng) -> LinearCode:
    while True:
        G = rng.integers(0, t.order, size=(k, n))
        C = LinearCode.from_generator(t, G, n)
        if C.k == k:
            return C
