import numpy as np
import pytest
from hypothesis import given, strategies as st

from hilbertian.config import DomainError, ResourceCapError
from hilbertian.pauli import (
    PauliOp,
    all_paulis,
    commutes,
    dense_matrix,
    multiply,
    pauli_from_index,
    pauli_from_letters,
)
from hilbertian.ring import ExactMatrix

X = np.array([[0, 1], [1, 0]])
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1, -1])


def test_index_thirteen_is_yz():
    p = pauli_from_index(2, 13)
    assert p.letters() == "Σ_yz"
    assert np.array_equal(dense_matrix(p).to_complex(), np.kron(Y, Z))


def test_identity_and_sigma6():
    assert pauli_from_index(1, 0).is_identity
    # Σ_zx printed as diag blocks (X, -X)
    assert np.array_equal(dense_matrix(pauli_from_index(2, 6)).to_complex(), np.kron(Z, X))


def test_out_of_range():
    with pytest.raises(DomainError):
        pauli_from_index(2, 16)


def test_xy_product():
    r = multiply(pauli_from_index(1, 2), pauli_from_index(1, 3))
    assert r.index == 1 and r.phase_exp == 1


def test_triangle_of_set_ten():
    r = multiply(pauli_from_index(2, 5), pauli_from_index(2, 10))
    assert r.index == 15 and r.phase_exp in (0, 2)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 4**n - 1))))
def test_square_is_identity(arg):
    n, i = arg
    p = pauli_from_index(n, i)
    sq = multiply(p, p)
    assert sq.is_identity and sq.phase_exp == 0


def test_commutation_examples():
    assert not commutes(pauli_from_index(1, 2), pauli_from_index(1, 3))
    assert commutes(pauli_from_index(2, 5), pauli_from_index(2, 10))
    assert all(commutes(p, pauli_from_index(2, 0)) for p in all_paulis(2))


def test_mismatch_errors():
    with pytest.raises(DomainError):
        multiply(pauli_from_index(1, 1), pauli_from_index(2, 1))
    with pytest.raises(DomainError):
        commutes(pauli_from_index(1, 1), pauli_from_index(2, 1))


def test_dense_examples():
    assert np.array_equal(dense_matrix(pauli_from_index(2, 1)).to_complex(), np.diag([1, -1, 1, -1]))
    assert dense_matrix(pauli_from_index(1, 0)) == ExactMatrix.identity(2)
    yy = dense_matrix(pauli_from_index(2, 15)).to_complex()
    assert np.array_equal(yy, np.fliplr(np.diag([-1, 1, 1, -1])))


def test_dense_cap():
    with pytest.raises(ResourceCapError):
        dense_matrix(pauli_from_index(6, 1))


@given(st.integers(0, 63), st.integers(0, 63))
def test_commutes_matches_dense(a, b):
    p, q = pauli_from_index(3, a), pauli_from_index(3, b)
    pq = dense_matrix(p) @ dense_matrix(q)
    qp = dense_matrix(q) @ dense_matrix(p)
    assert commutes(p, q) == (pq == qp)


@given(st.integers(0, 63), st.integers(0, 3))
def test_json_roundtrip(i, ph):
    p = pauli_from_index(3, i).with_phase(ph)
    assert PauliOp.from_json(p.to_json()) == p


def test_letters_roundtrip():
    for p in all_paulis(2):
        assert pauli_from_letters(p.letters()) == p
    assert str(pauli_from_index(2, 6).with_phase(2)) == "-Σ_6"
