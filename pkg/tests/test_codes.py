import random

import pytest

import oracles
from fengrao.codes import (
    BoundsRow,
    bounds_table,
    d2_lower_bound,
    delta_arf_closed,
    delta_arf_closed_range,
    e2_of,
    generic_dr_bound,
    griesmer_order_bound,
)
from fengrao.errors import BelowConductor, NotArf, NotMember, SemigroupError
from fengrao.inductive import InductiveDescriptor, build
from fengrao.semigroup import (
    NATURALS,
    feng_rao_distance,
    feng_rao_number_2_bruteforce,
    from_generators,
    from_small_elements,
    generalized_feng_rao_distance,
)
from fengrao.tower import TowerParams, tower_descriptor

T9 = build(tower_descriptor(TowerParams(9, 2)))
T16 = build(tower_descriptor(TowerParams(16, 2)))
ORDINARY_3 = from_small_elements([0, 3])


def test_delta_arf_examples():
    assert delta_arf_closed(T9, 128) == 14
    assert delta_arf_closed(T9, 143) == 16
    assert delta_arf_closed(ORDINARY_3, 5) == 2
    with pytest.raises(NotArf):
        delta_arf_closed(from_generators([3, 5]), 9)
    with pytest.raises(BelowConductor):
        delta_arf_closed(T9, 63)
    with pytest.raises(NotMember):
        delta_arf_closed(ORDINARY_3, 2)


def test_delta_arf_matches_bruteforce():
    rng = random.Random(1)
    for _ in range(80):
        a, b = oracles.random_descriptor(rng, max_conductor=300)
        S = build(InductiveDescriptor(a, b))
        for m in range(S.conductor, 2 * S.conductor + 11):
            assert delta_arf_closed(S, m) == feng_rao_distance(S, m)


def test_delta_arf_range_matches_scalar():
    rng = random.Random(2)
    for _ in range(40):
        a, b = oracles.random_descriptor(rng, max_conductor=300)
        S = build(InductiveDescriptor(a, b))
        c = S.conductor
        batch = delta_arf_closed_range(S, c, 2 * c + 10)
        assert batch.tolist() == [delta_arf_closed(S, m) for m in range(c, 2 * c + 11)]
    with pytest.raises(BelowConductor):
        delta_arf_closed_range(T9, 71, 80)
    with pytest.raises(NotArf):
        delta_arf_closed_range(from_generators([3, 5]), 8, 20)


def test_d2_examples():
    assert d2_lower_bound(T9, 136) == 19
    assert d2_lower_bound(T16, 469) == 37
    assert d2_lower_bound(T9, 127) == 10
    with pytest.raises(BelowConductor):
        d2_lower_bound(T9, 71)


def test_e2_of_falls_back_to_bruteforce():
    S = from_generators([4, 7, 9])
    assert e2_of(S) == feng_rao_number_2_bruteforce(S)
    assert e2_of(T9) == 9


def test_gob_examples():
    assert griesmer_order_bound(T9, 9, 127) == 16
    assert griesmer_order_bound(T9, 9, 134) == 18
    assert griesmer_order_bound(T16, 16, 463) == 32
    assert griesmer_order_bound(T9, 9, 127, arf=False) == 16
    with pytest.raises(SemigroupError):
        griesmer_order_bound(T9, 1, 127)


def test_generic_dr_examples():
    assert generic_dr_bound(T9, 2, 127) == 14
    assert generic_dr_bound(NATURALS, 2, 0) == 3
    with pytest.raises(SemigroupError):
        generic_dr_bound(T9, 0, 127)


def test_d2_bound_below_second_distance():
    rng = random.Random(4)
    for _ in range(30):
        a, b = oracles.random_descriptor(rng, max_n=3, max_conductor=40)
        S = build(InductiveDescriptor(a, b))
        c = S.conductor
        for m in range(c, 2 * c + 1):
            if m + 1 not in S:
                continue
            bound = d2_lower_bound(S, m)
            value = generalized_feng_rao_distance(S, 2, m + 1)
            assert bound <= value
            if m >= 2 * c - 2:
                assert bound == value


def test_winner():
    assert BoundsRow(1, 5, 4).winner == "goppa_like"
    assert BoundsRow(1, 4, 5).winner == "gob"
    assert BoundsRow(1, 4, 4).winner == "tie"
    assert BoundsRow(1, 4, 4).as_dict() == {"m": 1, "d2_goppa_like": 4, "gob": 4, "winner": "tie"}


def test_table_q9():
    t = bounds_table(TowerParams(9, 2))
    assert (t.m_from, t.m_to, t.genus, t.conductor, t.e2) == (127, 142, 64, 72, 9)
    assert [r.d2_goppa_like for r in t.rows] == list(range(10, 26))
    assert [r.gob for r in t.rows] == [16] * 7 + [18] * 9
    assert [r.m for r in t.rows if r.winner == "goppa_like"] == list(range(136, 143))


def test_table_q16():
    t = bounds_table(TowerParams(16, 2))
    assert (t.m_from, t.m_to) == (449, 478) and len(t.rows) == 30
    assert [r.d2_goppa_like for r in t.rows] == list(range(17, 47))
    assert [r.gob for r in t.rows] == [30] * 14 + [32] * 16
    assert [r.m for r in t.rows if r.winner == "goppa_like"] == list(range(465, 479))
    assert [r.m for r in t.rows if r.winner == "tie"] == [462, 464]


def test_table_single_row_and_empty_range():
    t = bounds_table(TowerParams(9, 2), 130, 130)
    assert len(t.rows) == 1 and t.rows[0].m == 130
    with pytest.raises(SemigroupError):
        bounds_table(TowerParams(9, 2), 131, 130)
