import json

import pytest
from hypothesis import given, settings, strategies as st

from hilbertian.config import DomainError, ResourceCapError
from hilbertian.pauli import commutes, pauli_from_index
from hilbertian.pseudostabilizer import (
    Entanglement,
    classify_two_qubit,
    count_formula,
    enumerate_maximal,
    index_commute,
    membership_counts,
    nearest_neighbors,
    neighbor_levels,
    shared_elements,
    summary_csv,
)


def test_one_qubit_sets():
    assert [s.element_indices for s in enumerate_maximal(1)] == [(0, 1), (0, 2), (0, 3)]


def test_set_ten():
    assert enumerate_maximal(2)[9].element_indices == (0, 5, 10, 15)


@pytest.mark.parametrize("n, want", [(1, 3), (2, 15), (3, 135), (4, 2295)])
def test_count_formula(n, want):
    assert count_formula(n) == want


def test_caps_and_domain():
    with pytest.raises(ResourceCapError):
        enumerate_maximal(5)
    with pytest.raises(DomainError):
        enumerate_maximal(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sets_are_maximal_commuting(n):
    sets = enumerate_maximal(n)
    assert len({s.index_set for s in sets}) == len(sets)
    for s in sets:
        assert len(s.element_indices) == 2**n
        for a in s.element_indices:
            for b in s.element_indices:
                assert index_commute(a, b, n)
                assert a ^ b in s.index_set  # closed under phase-free product
        outside = [c for c in range(4**n) if c not in s.index_set]
        assert all(any(not index_commute(c, a, n) for a in s.element_indices) for c in outside)


@given(st.integers(0, 63), st.integers(0, 63))
def test_index_commute_agrees_with_pauliop(a, b):
    assert index_commute(a, b, 3) == commutes(pauli_from_index(3, a), pauli_from_index(3, b))


def test_shared_elements():
    s = enumerate_maximal(2)
    assert {p.index for p in shared_elements(s[0], s[1])} == {0, 4}
    assert {p.index for p in shared_elements(s[0], s[9])} == {0, 5}
    one = enumerate_maximal(1)
    assert {p.index for p in shared_elements(one[0], one[2])} == {0}


def test_classification():
    s = enumerate_maximal(2)
    assert classify_two_qubit(s[0]) is Entanglement.PRODUCT
    assert classify_two_qubit(s[9]) is Entanglement.ENTANGLED
    assert classify_two_qubit(s[12]) is Entanglement.ENTANGLED
    with pytest.raises(DomainError):
        classify_two_qubit(enumerate_maximal(3)[0])


def test_neighbor_structure_two_qubits():
    sets = enumerate_maximal(2)
    levels = neighbor_levels(sets)
    # each set meets 6 others in two elements and 8 only in the identity
    assert all(h == {2: 6, 1: 8} for h in levels.values())
    assert all(len(nearest_neighbors(s, sets)) == 6 for s in sets)
    counts = membership_counts(sets)
    assert counts[0] == 15 and all(counts[i] == 3 for i in range(1, 16))


@settings(deadline=None)
@given(st.sampled_from([1, 2, 3]))
def test_membership_uniform(n):
    counts = membership_counts(enumerate_maximal(n))
    assert len({counts[i] for i in range(1, 4**n)}) == 1


def test_exports():
    s = enumerate_maximal(2)[12]
    assert json.loads(json.dumps(s.to_json())) == {
        "n": 2, "label": 13, "elements": [0, 6, 11, 13], "class": "entangled"
    }
    csv = summary_csv(enumerate_maximal(2)).splitlines()
    assert csv[0] == "label,size,class" and csv[10] == "10,4,entangled" and len(csv) == 16
