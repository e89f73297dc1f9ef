"""Acceptance criteria, one marker per criterion; see the summary section of the run."""

import math
from fractions import Fraction

import numpy as np
import pytest

from hilbertian import lattice
from hilbertian.pauli import all_paulis, dense_matrix, multiply, pauli_from_index
from hilbertian.pseudostabilizer import (
    Entanglement,
    TWO_QUBIT_TABLE,
    classify_two_qubit,
    count_formula,
    enumerate_maximal,
)
from hilbertian.ring import ExactMatrix
from hilbertian.roadmap import (
    CNOT_SYNONYM,
    build_polytope,
    decompose_named_gate,
    distances_from,
    navigate,
    polytope_size,
    sequence_from_indices,
    standard_gate,
    synthesize,
)
from hilbertian.rotations import (
    conjugate_pauli,
    enumerate_rotations,
    group_closure,
    inverse,
    rotation_from_indices,
)
from hilbertian.states import (
    StateVector,
    canonicalize,
    distance,
    eigenbasis,
    outer_projector,
    overlap,
)
from reference_tables import TWO_QUBIT_EIGENVECTORS

TOL = 1e-12
SPECTRUM_TOL = 1e-9

crit = pytest.mark.criterion


# 1 ---------------------------------------------------------------------------

@crit(1)
@pytest.mark.parametrize("n, sets, states", [(1, 3, 6), (2, 15, 60), (3, 135, 1080)])
def test_counts(n, sets, states):
    assert len(enumerate_maximal(n)) == sets == count_formula(n)
    assert len(build_polytope(n)) == states == polytope_size(n)


@crit(1)
def test_count_four_qubits_by_formula():
    assert len(enumerate_maximal(4)) == 2295 == count_formula(4)
    assert polytope_size(4) == 16 * 2295


# 2 ---------------------------------------------------------------------------

@crit(2)
def test_two_qubit_sets_match_table(two_qubit_sets):
    assert [s.element_indices for s in two_qubit_sets] == list(TWO_QUBIT_TABLE)
    entangled = {s.label for s in two_qubit_sets if classify_two_qubit(s) is Entanglement.ENTANGLED}
    assert entangled == {10, 11, 12, 13, 14, 15}


@crit(2)
def test_sixty_eigenvectors_match_table(two_qubit_sets):
    for s in two_qubit_sets:
        ours = {v.key() for _, v in eigenbasis(s)}
        printed = {canonicalize(StateVector.from_gaussian(row)).key() for row in TWO_QUBIT_EIGENVECTORS[s.label].values()}
        assert ours == printed, s.label


# 3 ---------------------------------------------------------------------------

@crit(3)
@pytest.mark.parametrize("n, count", [(1, 6), (2, 120)])
def test_rotation_census(n, count):
    rots = enumerate_rotations(n)
    assert len(rots) == count
    ident = ExactMatrix.identity(2**n)
    for x in rots:
        m = x.matrix
        assert m.dagger() @ m == ident
        assert m @ m @ m @ m == -ident


# 4 ---------------------------------------------------------------------------

@crit(4)
def test_normalizer_exhaustive_two_qubits():
    cases = 0
    for x in enumerate_rotations(2):
        m, mi = x.matrix, inverse(x).matrix
        for s in all_paulis(2):
            out = conjugate_pauli(x, s)
            assert out.phase_exp in (0, 2)  # unit +-1 times a phase-free Pauli
            assert m @ dense_matrix(s) @ mi == dense_matrix(out)
            cases += 1
    assert cases == 120 * 16


@crit(4)
def test_one_qubit_closure_is_octahedral(h1):
    g = group_closure(enumerate_rotations(1))
    rep = g.report(h1.states)
    assert rep["order"] == 24
    assert rep["transitive"] and rep["stabilizer_order"] == 4 and rep["kernel_order"] == 1


@crit(4)
@pytest.mark.slow
def test_two_qubit_closure(h2):
    g = group_closure(enumerate_rotations(2))
    rep = g.report(h2.states)
    assert rep["transitive"]
    assert rep["order"] == 60 * rep["stabilizer_order"]
    assert rep["order"] == 11520


# 5 ---------------------------------------------------------------------------

@crit(5)
@pytest.mark.parametrize("name, n", [("H", 1), ("S", 1), ("CNOT", 2)])
def test_named_gates(name, n):
    seq = decompose_named_gate(name)
    assert seq.verified
    assert seq.product().projectively_equal(standard_gate(name, n)) is not None


@crit(5)
def test_cnot_prefactor():
    # the three-term product is (1-i)/sqrt(2) times CNOT, i.e. omega**7
    assert decompose_named_gate("CNOT").phase == 7


@crit(5)
def test_nine_term_synonym():
    syn = sequence_from_indices(2, CNOT_SYNONYM)
    assert len(syn) == 9
    three = decompose_named_gate("CNOT").product()
    assert syn.product().projectively_equal(three) is not None
    assert syn.verify(standard_gate("CNOT")) is not None


@crit(5)
def test_synthesize_cnot_from_hamiltonian_primitives():
    gens = [rotation_from_indices(2, 0, k) for k in (1, 2, 4, 5, 8)]
    seq = synthesize(standard_gate("CNOT"), gens)
    assert seq.verified and len(seq) <= 9


# 6 ---------------------------------------------------------------------------

@crit(6)
@pytest.mark.parametrize("n", [1, 2])
def test_reachability_within_n_plus_one(n):
    size = len(build_polytope(n))
    worst = max(int(distances_from(n, s)[0].max()) for s in range(size))
    assert (distances_from(n, 0)[0] >= 0).all()
    assert worst <= n + 1


@crit(6)
def test_navigate_all_pairs_two_qubits(h2):
    # navigate verifies every word exactly before returning it
    for a in h2.states:
        for b in h2.states:
            assert len(navigate(a, b)) <= 3


# 7 ---------------------------------------------------------------------------

@crit(7)
def test_overlaps_and_min_distance(h2):
    allowed = {Fraction(0), Fraction(1, 4), Fraction(1, 2)}
    dmin = math.inf
    for i, a in enumerate(h2.states):
        for b in h2.states[i + 1:]:
            assert overlap(a, b).abs2_value() in allowed
            dmin = min(dmin, distance(a, b))
    assert abs(dmin - math.pi / 2) < TOL


# 8 ---------------------------------------------------------------------------

@crit(8)
def test_gosset_fibers():
    shell = lattice.gosset_shell()
    assert len(shell) == 240 and len({p.key8() for p in shell}) == 240
    assert sorted(len(v) for v in lattice.fibers().values()) == [24] * 10


@crit(8)
def test_gosset_quotient():
    rep = lattice.physical_states()
    classes = rep.by_class()
    assert len(classes["separable"]) == 36 and len(classes["mes"]) == 24
    assert all(r.multiplicity == 4 for r in rep.rays)
    sep_tags = {t for r in classes["separable"] for t, _ in r.preimages}
    mes_tags = {t for r in classes["mes"] for t, _ in r.preimages}
    assert sep_tags == set(range(1, 7)) and mes_tags == set(range(7, 11))
    assert sum(r.multiplicity for r in classes["separable"]) == 144
    assert sum(r.multiplicity for r in classes["mes"]) == 96


@crit(8)
@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_magic_basis(l):
    rep = lattice.physical_states()
    printed = lattice.magic_state(l)
    assert printed.key() in {r.key for r in rep.by_class()["mes"]}
    # the printed phase-0 vector is itself a Gosset vertex
    states = [lattice.pair_to_state(p) for p in lattice.gosset_shell()]
    assert any(all(a == b for a, b in zip(s.amps, printed.amps)) for s in states)


# 9 ---------------------------------------------------------------------------

@crit(9)
def test_crosscheck_bijection(h2):
    rep = lattice.crosscheck_with_polytope(h2=h2)
    assert rep.perfect and rep.summary() == "60/60 matched"


# 10 --------------------------------------------------------------------------

@crit(10)
@pytest.mark.parametrize("J, count", [(1, 240), (2, 2160), (3, 6720), (4, 17520)])
def test_shell_counts(J, count):
    assert len(lattice.e8_shell(J)) == count == lattice.shell_count_formula(J)


@crit(10)
def test_shell_two_spectrum():
    got = lattice.shell_concurrence_spectrum(2).values
    want = [0, 0.5, 1 / math.sqrt(2), 1]
    assert len(got) == len(want)
    assert all(abs(a - b) < SPECTRUM_TOL for a, b in zip(got, want))


@crit(10)
def test_shell_three_spectrum_and_reading():
    spec = lattice.shell_concurrence_spectrum(3)
    want = [0, 1 / 3, 2 / 3, math.sqrt(5) / 3, math.sqrt(8) / 3, 1]
    assert len(spec.values) == len(want)
    assert all(abs(a - b) < SPECTRUM_TOL for a, b in zip(spec.values, want))
    assert lattice.sqrt8_reading(spec) == "sqrt(8)/3"
    print("shell-3 value printed as sqrt8/3 reads as sqrt(8)/3 (c^2 = 8/9)")


# 11 --------------------------------------------------------------------------

def _perms(base):
    import itertools

    out = set()
    for perm in set(itertools.permutations(base)):
        for signs in itertools.product((1, -1), repeat=3):
            out.add(tuple(Fraction(s) * c for s, c in zip(signs, perm)))
    return out


OCTAHEDRON = _perms((1, 0, 0))
CENTER = {(Fraction(0),) * 3}
CUBE = _perms((Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
CUBOCTAHEDRON = _perms((Fraction(1, 2), Fraction(1, 2), 0))


@crit(11)
def test_bloch_shell_one():
    assert set(lattice.bloch_ball_discretization(1)) == OCTAHEDRON | CENTER


@crit(11)
def test_bloch_shell_two():
    pts = set(lattice.bloch_ball_discretization(2))
    assert pts == OCTAHEDRON | CENTER | CUBE | CUBOCTAHEDRON
    radii = {sum(c * c for c in p) for p in pts - OCTAHEDRON - CENTER}
    assert radii == {Fraction(3, 4), Fraction(1, 2)}


# 12 --------------------------------------------------------------------------

_SIGMA = [
    np.eye(2),
    np.diag([1.0, -1.0]),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
]


def _oracle(n, index):
    # independent float construction with the same index convention
    m = np.ones((1, 1), dtype=complex)
    for q in range(n):
        m = np.kron(m, _SIGMA[(index >> (2 * (n - 1 - q))) & 3])
    return m


def _check_multiply(n, a, b, pa=0, pb=0):
    p = pauli_from_index(n, a).with_phase(pa)
    q = pauli_from_index(n, b).with_phase(pb)
    r = multiply(p, q)
    want = (1j**pa) * _oracle(n, a) @ ((1j**pb) * _oracle(n, b))
    got = (1j**r.phase_exp) * _oracle(n, r.index)
    return np.array_equal(want, got)


@crit(12)
@pytest.mark.parametrize("n", [1, 2])
def test_multiply_oracle_exhaustive(n):
    size = 4**n
    assert all(_check_multiply(n, a, b, pa, pb) for a in range(size) for b in range(size) for pa in range(4) for pb in (0, 3))


@crit(12)
def test_multiply_oracle_randomized_three_qubits():
    rng = np.random.default_rng(20240611)
    draws = rng.integers(0, [64, 64, 4, 4], size=(10_000, 4))
    assert all(_check_multiply(3, *map(int, row)) for row in draws)


@crit(12)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_resolution_of_identity(n):
    for s in enumerate_maximal(n):
        total = None
        for _, v in eigenbasis(s):
            p = outer_projector(v)
            total = p if total is None else total + p
        assert total == ExactMatrix.identity(2**n), s.label


@crit(12)
@pytest.mark.parametrize("n", [1, 2])
def test_polytope_invariance(n):
    poly = build_polytope(n)
    table = poly.transition_table(enumerate_rotations(n))
    # every rotation permutes the state set
    assert all(len(set(row.tolist())) == len(poly) for row in table)
