import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullcraft.errors import NotADivisor, NotPrime
from hullcraft.field import (
    arith,
    build_tower,
    is_irreducible,
    parse_header,
    prime_power,
    smallest_irreducible,
    tower_for_q,
)

from conftest import I, ONE_PLUS_I


def gaussian_mul(a, b):
    """Reference product in GF(3)[i] computed by hand, no tables."""
    a0, a1 = a % 3, a // 3
    b0, b1 = b % 3, b // 3
    re = (a0 * b0 - a1 * b1) % 3
    im = (a0 * b1 + a1 * b0) % 3
    return re + 3 * im


def test_gf9_modulus_is_x2_plus_1(gf9):
    assert gf9.modulus == (1, 0, 1)
    assert gf9.q == 3 and gf9.order == 9


def test_build_tower_degrees():
    t = build_tower(2, 2)
    assert t.q == 4 and t.order == 16 and len(t.modulus) == 5


def test_build_tower_rejects_composite():
    with pytest.raises(NotPrime):
        build_tower(4, 1)


def test_gf9_examples(gf9):
    assert arith(gf9, I, I, "mul") == 2
    assert arith(gf9, 1, None, "inv") == 1
    assert arith(gf9, ONE_PLUS_I, 2 + 2 * I, "add") == 0
    assert gf9.frob(1) == 1
    assert gf9.frob(I) == 2 * I
    assert gf9.frob(ONE_PLUS_I) == 1 + 2 * I
    assert gf9.norm(0) == 0
    assert gf9.norm(I) == 1
    assert gf9.norm(ONE_PLUS_I) == 2


def test_gf9_matches_hand_multiplication(gf9):
    for a, b in itertools.product(range(9), repeat=2):
        assert gf9.mul(a, b) == gaussian_mul(a, b)


def test_subgroups(gf9):
    assert gf9.subgroup(1).tolist() == [1]
    assert set(gf9.subgroup(4).tolist()) == {1, I, 2, 2 * I}
    with pytest.raises(NotADivisor):
        gf9.subgroup(3)


def test_subgroup_has_exact_order(gf16):
    for n in (3, 5, 15):
        S = gf16.subgroup(n)
        assert len(set(S.tolist())) == n
        assert np.all(gf16.pow(S, n) == 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    t = tower_for_q(q)
    e = t.elements
    A, B = np.meshgrid(e, e, indexing="ij")
    S, P = t.add(A, B), t.mul(A, B)
    # commutativity, identities, inverses
    assert np.array_equal(S, S.T) and np.array_equal(P, P.T)
    assert np.array_equal(t.add(e, 0), e) and np.array_equal(t.mul(e, 1), e)
    assert np.all(t.add(e, t.neg(e)) == 0)
    assert np.all(t.mul(e[1:], t.inv(e[1:])) == 1)
    # each row of the multiplication table is a permutation for nonzero a
    for row in P[1:]:
        assert sorted(row.tolist()) == e.tolist()
    # Frobenius fixes exactly the subfield, and is additive/multiplicative
    fixed = e[t.frob(e) == e]
    assert len(fixed) == q and np.array_equal(np.sort(fixed), np.sort(t.subfield()))
    assert np.array_equal(t.frob(S), t.add(t.frob(A), t.frob(B)))
    assert np.array_equal(t.frob(P), t.mul(t.frob(A), t.frob(B)))
    # norm lands in GF(q) and is onto GF(q)*
    norms = set(t.norm(e[1:]).tolist())
    assert norms == set(t.subfield()[1:].tolist())


def test_generator_is_primitive(gf16):
    g = gf16.generator
    powers = {int(gf16.pow(g, j)) for j in range(15)}
    assert len(powers) == 15


def test_norm_preimage(gf16):
    for b in gf16.subfield()[1:]:
        assert gf16.norm(gf16.norm_preimage(int(b))) == b


def test_irreducibility():
    assert is_irreducible((1, 0, 1), 3)      # x^2 + 1 over GF(3)
    assert not is_irreducible((2, 0, 1), 3)  # x^2 + 2 = (x - 1)(x + 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    with pytest.raises(ValueError):
        prime_power(6)


def test_header_roundtrip(gf16):
    assert parse_header(gf16.header()) == gf16
    assert gf16.header().startswith("GF(2^4)")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24))
def test_distributive_gf25(a, b, c):
    t = tower_for_q(5)
    assert t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c))
    assert t.mul(a, t.mul(b, c)) == t.mul(t.mul(a, b), c)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 168), st.integers(0, 400))
def test_pow_matches_repeated_mul_gf169(a, e):
    t = tower_for_q(13)
    acc = 1
    for _ in range(e % 40):
        acc = t.mul(acc, a)
    assert t.pow(a, e % 40) == acc
    assert t.pow(a, t.order - 1) == 1
