"""Generalized Pauli matrices as binary symplectic vectors with an i**m phase.

Per qubit the two-bit code is ``2*x + z``: 0 -> w (identity), 1 -> z,
2 -> x, 3 -> y.  The N-qubit index concatenates the per-qubit codes with
qubit 0 (the leftmost tensor factor) most significant, so for two qubits
index 13 = 0b11_01 is sigma_y (x) sigma_z.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .config import DEFAULT_CAPS, DomainError, check_cap
from .ring import ExactMatrix

LETTERS = "wzxy"

_ONE_QUBIT = {
    0: np.array([[1, 0], [0, 1]], dtype=complex),
    1: np.array([[1, 0], [0, -1]], dtype=complex),
    2: np.array([[0, 1], [1, 0]], dtype=complex),
    3: np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def _phase_table():
    # exponent of i in sigma_a sigma_b = i**e sigma_(a^b), from the 2x2 products
    table = {}
    for a in range(4):
        for b in range(4):
            prod = _ONE_QUBIT[a] @ _ONE_QUBIT[b]
            ref = _ONE_QUBIT[a ^ b]
            for e in range(4):
                if np.allclose(prod, (1j**e) * ref):
                    table[a, b] = e
    return table


_PHASE = _phase_table()


@dataclass(frozen=True)
class PauliOp:
    n_qubits: int
    z_bits: int
    x_bits: int
    phase_exp: int = 0

    def __post_init__(self):
        if self.n_qubits < 1:
            raise DomainError("n_qubits must be positive")
        mask = (1 << self.n_qubits) - 1
        if not (0 <= self.z_bits <= mask and 0 <= self.x_bits <= mask):
            raise DomainError("bit vectors do not fit n_qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    def code(self, qubit: int) -> int:
        """Two-bit code (0..3 = w,z,x,y) of one tensor factor."""
        shift = self.n_qubits - 1 - qubit
        return 2 * ((self.x_bits >> shift) & 1) + ((self.z_bits >> shift) & 1)

    @cached_property
    def _codes(self) -> tuple[int, ...]:
        return tuple(self.code(q) for q in range(self.n_qubits))

    def codes(self) -> tuple[int, ...]:
        return self._codes

    @cached_property
    def index(self) -> int:
        idx = 0
        for c in self.codes():
            idx = 4 * idx + c
        return idx

    @property
    def is_identity(self) -> bool:
        return self.z_bits == 0 and self.x_bits == 0

    def unsigned(self) -> PauliOp:
        return PauliOp(self.n_qubits, self.z_bits, self.x_bits, 0)

    def with_phase(self, phase_exp: int) -> PauliOp:
        return PauliOp(self.n_qubits, self.z_bits, self.x_bits, phase_exp)

    def letters(self) -> str:
        return "Σ_" + "".join(LETTERS[c] for c in self.codes())

    def number(self) -> str:
        return f"Σ_{self.index}"

    def _prefix(self) -> str:
        return ("", "i·", "-", "-i·")[self.phase_exp]

    def __str__(self) -> str:
        return self._prefix() + self.number()

    def to_json(self) -> dict:
        n = self.n_qubits
        return {
            "n": n,
            "z": [(self.z_bits >> (n - 1 - q)) & 1 for q in range(n)],
            "x": [(self.x_bits >> (n - 1 - q)) & 1 for q in range(n)],
            "phase": self.phase_exp,
        }

    @classmethod
    def from_json(cls, data: dict) -> PauliOp:
        z = x = 0
        for bz, bx in zip(data["z"], data["x"]):
            z, x = 2 * z + int(bz), 2 * x + int(bx)
        return cls(int(data["n"]), z, x, int(data.get("phase", 0)))


def pauli_from_index(n_qubits: int, index: int) -> PauliOp:
    if n_qubits < 1:
        raise DomainError("n_qubits must be positive")
    if not 0 <= index < 4**n_qubits:
        raise DomainError(f"index {index} out of range for {n_qubits} qubit(s)")
    z = x = 0
    for q in range(n_qubits):
        c = (index >> (2 * (n_qubits - 1 - q))) & 3
        z = 2 * z + (c & 1)
        x = 2 * x + (c >> 1)
    return PauliOp(n_qubits, z, x, 0)


def pauli_from_letters(letters: str) -> PauliOp:
    letters = letters.removeprefix("Σ_")
    idx = 0
    for ch in letters:
        idx = 4 * idx + LETTERS.index(ch)
    return pauli_from_index(len(letters), idx)


@lru_cache(maxsize=None)
def all_paulis(n_qubits: int) -> tuple[PauliOp, ...]:
    return tuple(pauli_from_index(n_qubits, i) for i in range(4**n_qubits))


def _check_same(p: PauliOp, q: PauliOp) -> None:
    if p.n_qubits != q.n_qubits:
        raise DomainError(f"qubit count mismatch: {p.n_qubits} vs {q.n_qubits}")


def symplectic_product(p: PauliOp, q: PauliOp) -> int:
    _check_same(p, q)
    return (bin(p.z_bits & q.x_bits).count("1") + bin(p.x_bits & q.z_bits).count("1")) & 1


def commutes(p: PauliOp, q: PauliOp) -> bool:
    return symplectic_product(p, q) == 0


def multiply(p: PauliOp, q: PauliOp) -> PauliOp:
    _check_same(p, q)
    e = p.phase_exp + q.phase_exp
    for a, b in zip(p.codes(), q.codes()):
        e += _PHASE[a, b]
    return PauliOp(p.n_qubits, p.z_bits ^ q.z_bits, p.x_bits ^ q.x_bits, e)


def dense_matrix(p: PauliOp, cap: int = DEFAULT_CAPS.dense_qubits) -> ExactMatrix:
    check_cap(p.n_qubits, cap, "n_qubits")
    return ExactMatrix.from_complex_ints(_dense_unsigned(p.n_qubits, p.index)).times_i(
        p.phase_exp
    )


@lru_cache(maxsize=4096)
def _dense_unsigned(n: int, index: int) -> np.ndarray:
    p = pauli_from_index(n, index)
    mat = np.ones((1, 1), dtype=complex)
    for c in p.codes():
        mat = np.kron(mat, _ONE_QUBIT[c])
    mat.setflags(write=False)
    return mat
