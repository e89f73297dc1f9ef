"""Maximal pseudostabilizers: maximal commuting subsets of the phase-free Pauli set.

Internally a Pauli is its index; XOR of indices is the phase-free product, so
a pseudostabilizer is a maximal isotropic subspace of F_2^(2N) held as a
frozenset of indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .config import DEFAULT_CAPS, DomainError, check_cap
from .pauli import PauliOp, pauli_from_index

# two-qubit rows in the published order, labels 1..15 (10..15 entangled)
TWO_QUBIT_TABLE = (
    (0, 1, 4, 5),
    (0, 2, 4, 6),
    (0, 3, 4, 7),
    (0, 1, 8, 9),
    (0, 2, 8, 10),
    (0, 3, 8, 11),
    (0, 1, 12, 13),
    (0, 2, 12, 14),
    (0, 3, 12, 15),
    (0, 5, 10, 15),
    (0, 5, 11, 14),
    (0, 6, 9, 15),
    (0, 6, 11, 13),
    (0, 7, 9, 14),
    (0, 7, 10, 13),
)


class Entanglement(str, Enum):
    PRODUCT = "product"
    ENTANGLED = "entangled"


def _masks(n: int) -> tuple[int, int]:
    z = sum(1 << (2 * q) for q in range(n))
    return z, z << 1


def index_commute(a: int, b: int, n: int) -> bool:
    zm, xm = _masks(n)
    s = bin((a & zm) & ((b & xm) >> 1)).count("1") + bin(((a & xm) >> 1) & (b & zm)).count("1")
    return s % 2 == 0


def span(vectors) -> frozenset[int]:
    out = {0}
    for v in vectors:
        out |= {s ^ v for s in out}
    return frozenset(out)


def independent_generators(elements) -> tuple[int, ...]:
    """Greedy basis in ascending index order."""
    gens: list[int] = []
    spanned = {0}
    for e in sorted(elements):
        if e not in spanned:
            gens.append(e)
            spanned |= {s ^ e for s in spanned}
    return tuple(gens)


@dataclass(frozen=True)
class Pseudostabilizer:
    n_qubits: int
    element_indices: tuple[int, ...]
    label: int
    generator_indices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.generator_indices:
            object.__setattr__(
                self, "generator_indices", independent_generators(self.element_indices)
            )

    @property
    def elements(self) -> tuple[PauliOp, ...]:
        return tuple(pauli_from_index(self.n_qubits, i) for i in self.element_indices)

    @property
    def generators(self) -> tuple[PauliOp, ...]:
        return tuple(pauli_from_index(self.n_qubits, i) for i in self.generator_indices)

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(self.element_indices)

    @property
    def seed_pair(self) -> tuple[int, int]:
        """First two non-identity elements (defines the seed rotation)."""
        non_id = [i for i in self.element_indices if i]
        if len(non_id) < 2:
            return (0, non_id[0])
        return non_id[0], non_id[1]

    def to_json(self) -> dict:
        out = {"n": self.n_qubits, "label": self.label, "elements": list(self.element_indices)}
        if self.n_qubits == 2:
            out["class"] = classify_two_qubit(self).value
        return out


def count_formula(n_qubits: int) -> int:
    if n_qubits < 1:
        raise DomainError("n_qubits must be >= 1")
    return math.prod(2 ** (n_qubits - k) + 1 for k in range(n_qubits))


def _maximal_index_sets(n: int) -> set[frozenset[int]]:
    full = 1 << n
    found: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()

    def extend(sub: frozenset[int], cand: list[int]) -> None:
        if len(sub) == full:
            found.add(sub)
            return
        covered: set[int] = set()
        for v in cand:
            if v in covered:
                continue
            new = sub | {s ^ v for s in sub}
            covered |= new
            if new in seen:
                continue
            seen.add(new)
            extend(new, [c for c in cand if c not in new and index_commute(c, v, n)])

    extend(frozenset({0}), list(range(1, 4**n)))
    return found


@lru_cache(maxsize=None)
def _enumerate_cached(n_qubits: int) -> tuple[Pseudostabilizer, ...]:
    sets = sorted(tuple(sorted(s)) for s in _maximal_index_sets(n_qubits))
    if n_qubits == 2:
        order = {row: i + 1 for i, row in enumerate(TWO_QUBIT_TABLE)}
        sets.sort(key=order.__getitem__)
    return tuple(Pseudostabilizer(n_qubits, s, i + 1) for i, s in enumerate(sets))


def enumerate_maximal(n_qubits: int, cap: int = DEFAULT_CAPS.enumerate_qubits) -> list[Pseudostabilizer]:
    if n_qubits < 1:
        raise DomainError("n_qubits must be >= 1")
    check_cap(n_qubits, cap, "n_qubits")
    return list(_enumerate_cached(n_qubits))


def shared_elements(a: Pseudostabilizer, b: Pseudostabilizer) -> set[PauliOp]:
    if a.n_qubits != b.n_qubits:
        raise DomainError("qubit count mismatch")
    return {pauli_from_index(a.n_qubits, i) for i in a.index_set & b.index_set}


def classify_two_qubit(s: Pseudostabilizer) -> Entanglement:
    if s.n_qubits != 2:
        raise DomainError("product/entangled classification is defined for two qubits only")
    # any two non-identity elements generate, so some generating pair has a
    # one-qubit identity factor iff some non-identity element has one
    for e in s.elements:
        if not e.is_identity and 0 in e.codes():
            return Entanglement.PRODUCT
    return Entanglement.ENTANGLED


def neighbor_levels(sets: list[Pseudostabilizer]) -> dict[int, dict[int, int]]:
    """For each label, a histogram of intersection sizes with every other set."""
    out = {}
    for a in sets:
        hist: dict[int, int] = {}
        for b in sets:
            if b.label != a.label:
                size = len(a.index_set & b.index_set)
                hist[size] = hist.get(size, 0) + 1
        out[a.label] = hist
    return out


def nearest_neighbors(a: Pseudostabilizer, sets: list[Pseudostabilizer]) -> list[Pseudostabilizer]:
    half = 1 << (a.n_qubits - 1)
    return [b for b in sets if b.label != a.label and len(a.index_set & b.index_set) == half]


def membership_counts(sets: list[Pseudostabilizer]) -> dict[int, int]:
    """Number of pseudostabilizers containing each Pauli index."""
    counts: dict[int, int] = {}
    for s in sets:
        for i in s.element_indices:
            counts[i] = counts.get(i, 0) + 1
    return counts


def summary_csv(sets: list[Pseudostabilizer]) -> str:
    lines = ["label,size,class"]
    for s in sets:
        cls = classify_two_qubit(s).value if s.n_qubits == 2 else ""
        lines.append(f"{s.label},{len(s.element_indices)},{cls}")
    return "\n".join(lines) + "\n"
