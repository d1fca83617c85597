import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from fengrao.errors import NotAdmissibleShape
from fengrao.inductive import InductiveDescriptor, build, multiple_of
from fengrao.patterns import ARF, Pattern, admits_pattern, is_arf, is_saturated
from fengrao.semigroup import NATURALS, from_generators, from_small_elements

S35 = from_generators([3, 5])
G8 = from_small_elements([0, 8, 10, 12])


def brute_admits(S, coeffs, top):
    members = [x for x in range(top + 1) if x in S]
    k = len(coeffs)

    def rec(prefix):
        if len(prefix) == k:
            return sum(c * x for c, x in zip(coeffs, prefix)) in S
        bound = prefix[-1] if prefix else top
        return all(rec(prefix + [s]) for s in members if s <= bound)

    return rec([])


def test_pattern_shape_and_str():
    assert str(ARF) == "x1+x2-x3"
    assert str(Pattern((2, -1))) == "2x1-x2"
    assert ARF((5, 5, 3)) == 7
    with pytest.raises(NotAdmissibleShape):
        Pattern(())
    with pytest.raises(NotAdmissibleShape):
        Pattern((1, 0, 1))
    with pytest.raises(NotAdmissibleShape):
        Pattern((-1, 2)).check_shape()
    # total is 1 but the first two terms already undercut x1
    with pytest.raises(NotAdmissibleShape):
        Pattern((1, -2, 2)).check_shape()


def test_admits_examples():
    assert admits_pattern(NATURALS, ARF)
    res = admits_pattern(S35, ARF)
    assert not res and res.counterexample == (5, 5, 3)
    assert admits_pattern(G8, (2, -1))
    assert admits_pattern(G8, ARF)


def test_is_arf_examples():
    assert is_arf(NATURALS)
    assert not is_arf(S35)
    assert is_arf(G8)


def test_is_saturated_examples():
    assert not is_saturated(S35)
    assert is_saturated(multiple_of(S35, 5, 11))
    assert is_saturated(NATURALS)


semigroups = (
    st.lists(st.integers(2, 16), min_size=2, max_size=4, unique=True)
    .filter(lambda g: math.gcd(*g) == 1)
    .map(from_generators)
)


@settings(max_examples=150, deadline=None)
@given(semigroups)
def test_arf_routes_agree(S):
    assert is_arf(S) == bool(admits_pattern(S, ARF)) == bool(admits_pattern(S, (2, -1)))


@settings(max_examples=60, deadline=None)
@given(semigroups, st.sampled_from([(1, 1, -1), (2, -1), (1, 1), (2,), (3, -1, -1), (1, 1, 1, -2)]))
def test_admission_matches_unbounded_scan(S, coeffs):
    assert bool(admits_pattern(S, coeffs)) == brute_admits(S, coeffs, 2 * S.conductor + 4)


@settings(max_examples=100, deadline=None)
@given(semigroups)
def test_saturated_implies_arf(S):
    if is_saturated(S):
        assert is_arf(S)


def test_inductive_semigroups_are_arf_and_saturated():
    rng = random.Random(3)
    for _ in range(100):
        a, b = oracles.random_descriptor(rng, max_conductor=800)
        S = build(InductiveDescriptor(a, b))
        assert is_arf(S)
        assert is_saturated(S)


def random_saturated(rng):
    while True:
        S = from_generators(oracles.random_generators(rng, max_gen=15))
        if is_saturated(S):
            return S


def test_preservation_of_saturation():
    rng = random.Random(5)
    for _ in range(100):
        S = random_saturated(rng)
        a, b = rng.randint(1, 6), rng.randint(1, 40)
        assert is_saturated(multiple_of(S, a, b))


@pytest.mark.parametrize("coeffs", [(1, 1, -1), (2,), (1, 1)])
def test_pattern_preserved_by_multiples(coeffs):
    rng = random.Random(sum(coeffs) + len(coeffs))
    hits = 0
    while hits < 60:
        S = from_generators(oracles.random_generators(rng, max_gen=14))
        if not admits_pattern(S, coeffs):
            continue
        hits += 1
        a, b = rng.randint(1, 5), rng.randint(1, 40)
        assert admits_pattern(multiple_of(S, a, b), coeffs)


def test_fold_contrapositive():
    # an unsaturated S never becomes saturated under a S ∪ (b + N) with b >= a c(S)
    rng = random.Random(9)
    checked = 0
    while checked < 100:
        S = from_generators(oracles.random_generators(rng, max_gen=15))
        if is_saturated(S):
            continue
        checked += 1
        a = rng.randint(1, 5)
        b = a * S.conductor + rng.randint(0, 10)
        assert not is_saturated(multiple_of(S, a, b))
