import json

import pytest

from hullcraft.eaqec import (
    CSV_COLUMNS,
    EaqecParams,
    choose_family_spec,
    count_distinct_c,
    css_dual,
    css_primary,
    defect,
    enumerate_for_length_distance,
    generic_code,
    is_mds_eaqec,
    sweep_length_distance,
)
from hullcraft.errors import BadLevel, BadRange
from hullcraft.lincode import is_mds
from hullcraft.rsfam import FamilySpec


def params(n, k, d, c):
    return EaqecParams(n, k, d, c)


def test_css_primary():
    assert css_primary(8, 4, 5, 2).to_json() == {"n": 8, "k": 2, "d": 5, "c": 2}
    assert css_primary(8, 4, 5, 0).to_json() == {"n": 8, "k": 4, "d": 5, "c": 4}
    with pytest.raises(BadLevel):
        css_primary(8, 4, 5, 5)


def test_css_dual():
    assert css_dual(8, 4, 5, 2).to_json() == {"n": 8, "k": 2, "d": 5, "c": 2}
    assert css_dual(8, 4, 5, 0).to_json() == {"n": 8, "k": 4, "d": 5, "c": 4}
    assert css_dual(10, 5, 6, 1).to_json() == {"n": 10, "k": 4, "d": 6, "c": 4}


def test_defect_and_mds_flag():
    assert defect(params(8, 2, 5, 2)) == 0
    assert defect(params(8, 4, 5, 4)) == 0
    assert defect(params(8, 4, 4, 4)) == 2
    assert is_mds_eaqec(params(8, 2, 5, 2))
    assert not is_mds_eaqec(params(8, 4, 4, 4))
    assert not is_mds_eaqec(params(4, 0, 4, 2))


def test_str():
    assert str(EaqecParams(8, 2, 5, 2, 3)) == "[[8, 2, 5, 2]]_3"


def test_enumerate_8_5():
    recs = enumerate_for_length_distance(3, 8, 5)
    found = {(r.eaqec.n, r.eaqec.k, r.eaqec.d, r.eaqec.c) for r in recs}
    assert {(8, 2, 5, 2), (8, 4, 5, 4)} <= found
    assert len({r.eaqec.c for r in recs}) == len(recs)
    assert all(r.mds and r.defect == 0 for r in recs)


def test_enumerate_10_6():
    recs = enumerate_for_length_distance(3, 10, 6)
    assert any(r.eaqec.c >= 1 for r in recs)
    assert recs[0].family == "generic"


def test_enumerate_range_errors():
    with pytest.raises(BadRange):
        enumerate_for_length_distance(3, 8, 6)
    with pytest.raises(BadRange):
        enumerate_for_length_distance(3, 11, 3)
    with pytest.raises(BadRange):
        enumerate_for_length_distance(2, 4, 2)


def test_records_are_sorted_and_serialisable():
    recs = sweep_length_distance(3, [(8, 5), (8, 4), (6, 3)])
    keys = [(r.n, r.d, r.eaqec.c) for r in recs]
    assert keys == sorted(keys)
    for r in recs:
        blob = json.loads(json.dumps(r.to_json()))
        e = blob["eaqec"]
        assert is_mds_eaqec(EaqecParams(e["n"], e["k"], e["d"], e["c"])) == blob["mds"]
        assert len(r.csv_row()) == len(CSV_COLUMNS)


def test_sweep_is_worker_independent():
    pairs = [(n, d) for n in (6, 8, 10) for d in range(2, n // 2 + 2)]
    one = sweep_length_distance(3, pairs, workers=1)
    four = sweep_length_distance(3, pairs, workers=4)
    assert [r.to_json() for r in one] == [r.to_json() for r in four]


def test_count_distinct_c():
    assert count_distinct_c(3, 8, 4) >= 3
    assert count_distinct_c(4, 15, 8) >= 3
    spec = FamilySpec("coset", 4, 5, 3, 5, 1, (1,))
    assert spec.k_1 == 0
    assert count_distinct_c(4, 5, 3, spec) >= 1


def test_family_choice():
    assert choose_family_spec(3, 8, 5).family == "subgroup"
    assert choose_family_spec(4, 10, 6).family == "coset"
    assert choose_family_spec(3, 10, 5) is None


@pytest.mark.parametrize("n,k", [(10, 5), (10, 8), (7, 4)])
def test_generic_code_is_mds(n, k):
    assert is_mds(generic_code(3, n, k))
