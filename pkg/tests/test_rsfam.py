import math

import numpy as np
import pytest

from hullcraft.errors import BadDimension, CosetCollision, PreconditionError
from hullcraft.lincode import hermitian_dual, is_mds, min_distance, scale
from hullcraft.rsfam import (
    FamilySpec,
    build_family,
    coset_candidate,
    coset_factor,
    coset_points,
    count_common_monomials,
    multiplier_u,
    punctured_candidate,
    rs_eval,
    subgroup_candidate,
    valid_coset_orders,
)

from helpers import gram_hull_dim


def test_multiplier_u_examples(gf9):
    assert multiplier_u(gf9, [1, 2]).tolist() == [2, 1]
    assert multiplier_u(gf9, [1]).tolist() == [1]


@pytest.mark.parametrize("n", [2, 4, 8])
def test_multiplier_u_on_subgroup(gf9, n):
    a = gf9.subgroup(n)
    expected = gf9.mul(n % 3, gf9.pow(a, n - 1))
    assert np.array_equal(multiplier_u(gf9, a), expected)


def test_rs_eval_examples(gf9):
    a = gf9.subgroup(8)
    assert rs_eval(gf9, a, 8).k == 8
    C = rs_eval(gf9, a, 4)
    assert (C.n, C.k, min_distance(C)) == (8, 4, 5)
    with pytest.raises(BadDimension):
        rs_eval(gf9, a, 0)


def test_count_common_monomials():
    assert count_common_monomials(3, 8, range(1, 5), range(0, 4)) == 2
    assert count_common_monomials(7, 11, [], range(5)) == 0
    assert count_common_monomials(3, 8, range(1, 9), range(0, 8)) == 8


def test_subgroup_candidate_examples(gf9):
    C, r = subgroup_candidate(gf9, 8, 4)
    assert (C.n, C.k, min_distance(C)) == (8, 4, 5)
    assert r.bound_count == 2 and r.hull_dim >= 2
    assert r.hull_dim == gram_hull_dim(C)
    _, r = subgroup_candidate(gf9, 8, 5)
    assert r.bound_count == 1
    with pytest.raises(PreconditionError):
        subgroup_candidate(gf9, 8, 3)


@pytest.mark.parametrize("q,n,k", [(3, 8, 4), (3, 8, 6), (4, 15, 9), (5, 12, 7), (5, 24, 13)])
def test_subgroup_hermitian_dual_is_rs(q, n, k):
    spec = FamilySpec("subgroup", q, n, k)
    t = spec.tower
    C, _ = build_family(spec)
    assert hermitian_dual(C) == rs_eval(t, t.subgroup(n), n - k)


def test_coset_points_examples(gf16):
    assert set(coset_points(gf16, 5, [1]).tolist()) == set(gf16.subgroup(5).tolist())
    omega = int(gf16.subfield()[2])
    pts = coset_points(gf16, 5, [1, omega])
    assert len(set(pts.tolist())) == 10


def test_coset_collision(gf9):
    with pytest.raises(CosetCollision):
        coset_points(gf9, 4, [1, 2])


def test_valid_coset_orders():
    assert valid_coset_orders(4) == [1, 5]
    assert valid_coset_orders(5) == [1, 3]
    assert valid_coset_orders(7) == [1]


def test_coset_factor_lies_in_subfield(gf16):
    for v in (1, 2, 3):
        b = gf16.subfield()[1: v + 1]
        B = coset_factor(gf16, 5, b)
        assert all(gf16.in_subfield(int(x)) and x for x in B)


def test_coset_candidate_examples(gf16):
    b2 = tuple(int(x) for x in gf16.subfield()[1:3])
    C, r = coset_candidate(FamilySpec("coset", 4, 10, 5, 5, 2, b2))
    assert (C.n, C.k) == (10, 5) and r.hull_dim >= 1 and r.oracle_ok
    assert is_mds(C)
    spec = FamilySpec("coset", 4, 5, 3, 5, 1, (1,))
    assert spec.k_1 == 0
    _, r = coset_candidate(spec)
    assert r.bound_claimed == 0 and r.hull_dim >= 0
    with pytest.raises(PreconditionError):
        coset_candidate(FamilySpec("coset", 4, 15, 8, 15, 1, (1,)))


def test_coset_dual_identity(gf16):
    # the Hermitian dual is eta^-q . RS(n, n - k) on the same points
    b = tuple(int(x) for x in gf16.subfield()[1:4])
    spec = FamilySpec("coset", 4, 15, 9, 5, 3, b)
    C, _ = coset_candidate(spec)
    a = coset_points(gf16, 5, b)
    B = coset_factor(gf16, 5, b)
    eta = np.array([gf16.norm_preimage(int(x)) for x in B])
    expected = scale(rs_eval(gf16, a, spec.n - spec.k), gf16.inv(gf16.frob(eta)))
    assert hermitian_dual(C) == expected


def test_punctured_examples(gf16):
    b2 = tuple(int(x) for x in gf16.subfield()[1:3])
    base, _ = coset_candidate(FamilySpec("coset", 4, 10, 5, 5, 2, b2))
    same, _ = punctured_candidate(FamilySpec("punctured-coset", 4, 10, 5, 5, 2, b2, 0))
    assert same == base
    C, r = punctured_candidate(FamilySpec("punctured-coset", 4, 9, 5, 5, 2, b2, 1))
    assert (C.n, C.k) == (9, 5) and r.bound_claimed == 0 and r.hull_dim >= 0
    with pytest.raises(PreconditionError):
        # t = n - k + 1 with n = 10 - t: t = 3 gives n = 7, k = 5, n - k + 1 = 3
        punctured_candidate(FamilySpec("punctured-coset", 4, 7, 5, 5, 2, b2, 3))


def test_printed_condition_versus_gcd():
    # (q+1) | n_1 with odd q always meets GF(q)* nontrivially
    for q in (3, 5, 7):
        for n_1 in range(q + 1, q * q, q + 1):
            if (q * q - 1) % n_1 == 0:
                assert math.gcd(n_1, q - 1) != 1
