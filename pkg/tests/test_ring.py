import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hilbertian.config import DomainError
from hilbertian.ring import (
    OMEGA,
    CycAmp,
    ExactMatrix,
    canonical_gaussian_vector,
    gauss_gcd,
    projective_canonical_batch,
)

small = st.integers(-20, 20)
amps = st.builds(CycAmp, small, small, st.integers(0, 6))


def close(a, b):
    return abs(complex(a) - complex(b)) < 1e-9


def test_normalization_is_unique():
    assert CycAmp(2, 4, 2) == CycAmp(1, 2, 0)
    assert CycAmp(0, 0, 5).k == 0
    assert CycAmp(1, 1, -1) == CycAmp(2, 2, 1)


def test_omega_is_eighth_root():
    w = OMEGA
    p = CycAmp(1, 0, 0)
    for _ in range(8):
        p = p * w
    assert p == CycAmp(1, 0, 0)
    assert close(OMEGA, cmath.exp(1j * cmath.pi / 4))


@given(amps, amps)
def test_mul_matches_complex(a, b):
    assert close(a * b, complex(a) * complex(b))


@given(amps, amps)
def test_add_matches_complex_or_rejects_parity(a, b):
    if a.is_zero() or b.is_zero() or a.k % 2 == b.k % 2:
        assert close(a + b, complex(a) + complex(b))
    else:
        with pytest.raises(DomainError):
            a + b


@given(amps)
def test_abs2_is_rational_and_right(a):
    assert abs(float(a.abs2_value()) - abs(complex(a)) ** 2) < 1e-9


@given(st.tuples(small, small), st.tuples(small, small))
def test_gauss_gcd_divides(a, b):
    g = gauss_gcd(a, b)
    if g == (0, 0):
        assert a == b == (0, 0)
        return
    for z in (a, b):
        q = complex(*z) / complex(*g)
        assert abs(q.real - round(q.real)) < 1e-9 and abs(q.imag - round(q.imag)) < 1e-9


@pytest.mark.parametrize(
    "entries, want",
    [
        ([(0, 0), (0, 1), (0, 0), (0, 0)], ((0, 0), (1, 0), (0, 0), (0, 0))),
        ([(1, 1), (1, 1)], ((1, 0), (1, 0))),
    ],
)
def test_canonical_vector_examples(entries, want):
    assert canonical_gaussian_vector(entries) == want


def test_canonical_vector_mes_amplitudes():
    # eps (|00> + |01> - |10> + |11>)/2 with eps = (1+i)/sqrt(2)
    entries = [(1, 1), (1, 1), (-1, -1), (1, 1)]
    assert canonical_gaussian_vector(entries) == ((1, 0), (1, 0), (-1, 0), (1, 0))


def test_canonical_vector_rejects_zero():
    with pytest.raises(DomainError):
        canonical_gaussian_vector([(0, 0), (0, 0)])


@given(st.lists(st.tuples(small, small), min_size=2, max_size=4), st.integers(0, 3))
def test_canonical_vector_unit_invariant(entries, m):
    if all(z == (0, 0) for z in entries):
        return
    rotated = [tuple(np.round(np.array([(complex(*z) * 1j**m).real, (complex(*z) * 1j**m).imag])).astype(int)) for z in entries]
    assert canonical_gaussian_vector(entries) == canonical_gaussian_vector(rotated)


def test_matrix_projective_equality():
    a = ExactMatrix([[1, 1], [1, -1]], None, 1)
    for m in range(8):
        from hilbertian.ring import OMEGA_POWERS

        assert a.scale(OMEGA_POWERS[m]).projectively_equal(a) == m


def test_batch_canonical_matches_scalar_form():
    a = ExactMatrix([[1, 0], [0, 1]], [[1, 0], [0, -1]], 1)  # diag(1+i, 1-i)/sqrt2
    b = a.scale(OMEGA).scale(OMEGA)
    ra, ia, _ = projective_canonical_batch(a.re[None], a.im[None])
    rb, ib, _ = projective_canonical_batch(b.re[None], b.im[None])
    assert (ra == rb).all() and (ia == ib).all()


def test_matrix_add_rejects_mixed_parity():
    with pytest.raises(DomainError):
        ExactMatrix([[1]], None, 0) + ExactMatrix([[1]], None, 1)
