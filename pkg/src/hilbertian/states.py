"""Exact simultaneous eigenvectors of pseudostabilizers, overlaps and distances."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .config import DomainError
from .pauli import dense_matrix, pauli_from_index
from .pseudostabilizer import Pseudostabilizer
from .ring import CycAmp, ExactMatrix, canonical_gaussian_vector


@dataclass(frozen=True)
class EigenvaluePattern:
    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError("eigenvalue signs must be +1 or -1")

    def seed_label(self) -> str:
        """Eigenvalue of the seed rotation, unnormalized, e.g. '-1+i'."""
        if len(self.signs) == 1:
            re, im = 1, self.signs[0]
        else:
            re, im = self.signs[0], self.signs[1]
        return f"{re}{'+' if im > 0 else '-'}i"


@dataclass(frozen=True)
class StateVector:
    n_qubits: int
    amps: tuple[CycAmp, ...]
    set_label: int | None = None
    pattern: EigenvaluePattern | None = None

    def __post_init__(self):
        if len(self.amps) != 2**self.n_qubits:
            raise DomainError("amplitude count does not match n_qubits")
        object.__setattr__(self, "amps", tuple(CycAmp.coerce(a) for a in self.amps))

    @classmethod
    def from_gaussian(cls, entries, n_qubits: int | None = None, **kw) -> StateVector:
        """Build from (re, im) pairs or Python complex numbers with integer parts."""
        amps = []
        for e in entries:
            if isinstance(e, tuple):
                amps.append(CycAmp(e[0], e[1], 0))
            else:
                z = complex(e)
                amps.append(CycAmp(int(z.real), int(z.imag), 0))
        n = n_qubits if n_qubits is not None else int(math.log2(len(amps)))
        return cls(n, tuple(amps), **kw)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.amps)

    def gaussian_numerators(self) -> tuple[list[tuple[int, int]], int]:
        """Gaussian numerators g and exponent K with amps = g / sqrt(2)**K."""
        nonzero = [a for a in self.amps if not a.is_zero()]
        if not nonzero:
            return [(0, 0)] * len(self.amps), 0
        if len({a.k % 2 for a in nonzero}) > 1:
            raise DomainError("amplitudes mix sqrt(2) exponent parities")
        big = max(a.k for a in nonzero)
        out = []
        for a in self.amps:
            s = 0 if a.is_zero() else 2 ** ((big - a.k) // 2)
            out.append((a.re * s, a.im * s))
        return out, big

    def norm2(self) -> CycAmp:
        total = CycAmp(0, 0, 0)
        for a in self.amps:
            total = total + a.abs2()
        return total

    def inv_norm(self) -> CycAmp:
        """Positive real c in the ring with c**2 * <v|v> == 1."""
        n2 = self.norm2()
        if n2.is_zero():
            raise DomainError("zero vector")
        r = n2.re
        if n2.im != 0 or r & (r - 1) or n2.k % 2:
            raise DomainError("norm is not a power of sqrt(2); not normalizable in the ring")
        e = r.bit_length() - 1
        # <v|v> = 2**e / sqrt(2)**k = sqrt(2)**(2e - k)
        return CycAmp(1, 0, e - n2.k // 2)

    def normalized(self) -> StateVector:
        c = self.inv_norm()
        return StateVector(self.n_qubits, tuple(a * c for a in self.amps), self.set_label, self.pattern)

    def key(self) -> tuple[tuple[int, int], ...]:
        """Hashable ray identifier."""
        return canonical_gaussian_vector(self.gaussian_numerators()[0])

    def to_complex(self) -> np.ndarray:
        return np.array([complex(a) for a in self.amps])

    def to_json(self) -> dict:
        v = self.normalized()
        out = {"n": self.n_qubits, "amps": [[a.re, a.im, a.k] for a in v.amps]}
        if self.set_label is not None:
            out["set"] = self.set_label
        if self.pattern is not None:
            out["pattern"] = list(self.pattern.signs)
        return out

    @classmethod
    def from_json(cls, data: dict) -> StateVector:
        pattern = EigenvaluePattern(tuple(data["pattern"])) if "pattern" in data else None
        return cls(
            int(data["n"]),
            tuple(CycAmp(*a) for a in data["amps"]),
            data.get("set"),
            pattern,
        )

    def row_string(self) -> str:
        """Unnormalized row vector in the style '(1,-i,0,1)'."""
        parts = []
        for a in self.amps:
            if a.k:
                parts.append(str(a))
            elif a.im == 0:
                parts.append(str(a.re))
            elif a.re == 0:
                parts.append({1: "i", -1: "-i"}.get(a.im, f"{a.im}i"))
            else:
                parts.append(f"{a.re}{a.im:+d}i")
        return "(" + ",".join(parts) + ")"


def canonicalize(v: StateVector) -> StateVector:
    if v.is_zero():
        raise DomainError("zero vector has no canonical form")
    entries = v.key()
    return StateVector(v.n_qubits, tuple(CycAmp(a, b, 0) for a, b in entries), v.set_label, v.pattern)


def same_ray(a: StateVector, b: StateVector) -> bool:
    return a.n_qubits == b.n_qubits and a.key() == b.key()


def _generator_matrices(s: Pseudostabilizer) -> list[ExactMatrix]:
    return [dense_matrix(pauli_from_index(s.n_qubits, g)) for g in s.generator_indices]


def patterns(n_generators: int) -> list[EigenvaluePattern]:
    return [EigenvaluePattern(p) for p in itertools.product((1, -1), repeat=n_generators)]


def eigenbasis(s: Pseudostabilizer) -> list[tuple[EigenvaluePattern, StateVector]]:
    dim = 2**s.n_qubits
    ident = ExactMatrix.identity(dim)
    gens = _generator_matrices(s)
    out = []
    for pat in patterns(len(gens)):
        proj = ident
        for lam, g in zip(pat.signs, gens):
            proj = proj @ (ident + g if lam == 1 else ident - g)
        nz = np.flatnonzero((proj.re != 0).any(axis=0) | (proj.im != 0).any(axis=0))
        col = int(nz[0])
        vec = StateVector(
            s.n_qubits,
            tuple(CycAmp(int(proj.re[r, col]), int(proj.im[r, col]), 0) for r in range(dim)),
            s.label,
            pat,
        )
        out.append((pat, canonicalize(vec)))
    return out


def pauli_eigenvalue(v: StateVector, index: int) -> int:
    """+1 or -1 with S_index |v> = +-|v>; DomainError if v is not an eigenvector."""
    g, big = v.gaussian_numerators()
    vec = ExactMatrix([[a] for a, _ in g], [[b] for _, b in g], big)
    out = dense_matrix(pauli_from_index(v.n_qubits, index)) @ vec
    if out == vec:
        return 1
    if out == -vec:
        return -1
    raise DomainError(f"state is not an eigenvector of Σ_{index}")


def seed_eigenvalue_label(v: StateVector, pair: tuple[int, int]) -> str:
    """Unnormalized eigenvalue of X_jk = (S_j + i S_k)/sqrt(2) on v, e.g. '1-i'."""
    re, im = (pauli_eigenvalue(v, i) for i in pair)
    return f"{re}{'+' if im > 0 else '-'}i"


def inner(a: StateVector, b: StateVector) -> CycAmp:
    if a.n_qubits != b.n_qubits:
        raise DomainError("qubit count mismatch")
    total = CycAmp(0, 0, 0)
    for x, y in zip(a.amps, b.amps):
        total = total + x.conj() * y
    return total


def overlap(a: StateVector, b: StateVector) -> CycAmp:
    """Normalized inner product <a|b>, exact."""
    return inner(a, b) * a.inv_norm() * b.inv_norm()


def distance(a: StateVector, b: StateVector) -> float:
    mag = min(1.0, abs(overlap(a, b)))
    return 2.0 * math.acos(mag)


def inferred_rotation_angle(delta: float) -> float:
    if not -1.0 <= delta <= 1.0:
        raise DomainError("delta must lie in [-1, 1]")
    return 2.0 * math.acos(math.sqrt((delta + 1.0) / 2.0))


def outer_projector(v: StateVector) -> ExactMatrix:
    """|v><v| / <v|v> as an exact matrix."""
    g, _ = v.gaussian_numerators()
    col = ExactMatrix([[a] for a, _ in g], [[b] for _, b in g], 0)
    n2 = sum(a * a + b * b for a, b in g)
    if n2 & (n2 - 1):
        raise DomainError("norm is not a power of two")
    rank1 = col @ col.dagger()
    return ExactMatrix(rank1.re, rank1.im, 2 * (n2.bit_length() - 1))


def apply(mat: ExactMatrix, v: StateVector) -> StateVector:
    g, big = v.gaussian_numerators()
    col = ExactMatrix([a for a, _ in g], [b for _, b in g], big)
    out = mat @ col
    return StateVector(
        v.n_qubits,
        tuple(CycAmp(int(r), int(i), out.k) for r, i in zip(out.re, out.im)),
    )


def golden_table_csv(sets: list[Pseudostabilizer]) -> str:
    """Eigenvector table: one row per set, one column per seed eigenvalue."""
    bases = [dict((p.seed_label(), v) for p, v in eigenbasis(s)) for s in sets]
    columns = sorted(bases[0])
    lines = ["set," + ",".join(columns)]
    for s, basis in zip(sets, bases):
        lines.append(
            f"{s.label}," + ",".join('"' + basis[c].row_string() + '"' for c in columns)
        )
    return "\n".join(lines) + "\n"
