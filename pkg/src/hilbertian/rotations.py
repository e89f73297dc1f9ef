"""Generalized pi/2 rotations X_jk = (S_j + i S_k)/sqrt(2) and their group."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .config import DEFAULT_CAPS, DomainError, ResourceCapError, check_cap
from .pauli import PauliOp, all_paulis, commutes, dense_matrix, multiply, pauli_from_index
from .ring import ExactMatrix, projective_canonical_batch

# a unit times a phase-0 Pauli; the unit lives in PauliOp.phase_exp
SignedPauli = PauliOp


@dataclass(frozen=True)
class Rotation:
    j: PauliOp
    k: PauliOp

    def __post_init__(self):
        for p in (self.j, self.k):
            if p.phase_exp:
                raise DomainError("rotation constituents must be phase-free")
        if self.j.n_qubits != self.k.n_qubits:
            raise DomainError("qubit count mismatch")
        if self.j == self.k:
            raise DomainError("rotation constituents must differ")
        if not commutes(self.j, self.k):
            raise DomainError(f"{self.j} and {self.k} anticommute")

    @property
    def n_qubits(self) -> int:
        return self.j.n_qubits

    @property
    def indices(self) -> tuple[int, int]:
        return self.j.index, self.k.index

    @property
    def is_primitive(self) -> bool:
        return self.j.is_identity

    @cached_property
    def matrix(self) -> ExactMatrix:
        sj, sk = dense_matrix(self.j), dense_matrix(self.k)
        s = sj + sk.times_i(1)
        return ExactMatrix(s.re, s.im, 1)

    def __str__(self) -> str:
        return f"X[{self.j.index},{self.k.index}]"

    def to_json(self) -> dict:
        return {"j": self.j.index, "k": self.k.index}


@dataclass(frozen=True)
class UnitRotation:
    """The rotation scaled by i**phase."""

    rotation: Rotation
    phase: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def matrix(self) -> ExactMatrix:
        return self.rotation.matrix.times_i(self.phase)

    def __str__(self) -> str:
        return ("", "i·", "-", "-i·")[self.phase] + str(self.rotation)


def make_rotation(j: PauliOp, k: PauliOp) -> Rotation:
    return Rotation(j, k)


def rotation_from_indices(n_qubits: int, j: int, k: int) -> Rotation:
    return Rotation(pauli_from_index(n_qubits, j), pauli_from_index(n_qubits, k))


def _as_unit(x: Rotation | UnitRotation) -> UnitRotation:
    return x if isinstance(x, UnitRotation) else UnitRotation(x, 0)


def inverse(x: Rotation | UnitRotation) -> UnitRotation:
    # (i**p X_jk)^-1 = i**-p (-i) X_kj
    u = _as_unit(x)
    r = u.rotation
    return UnitRotation(Rotation(r.k, r.j), 3 - u.phase)


def square(x: Rotation) -> SignedPauli:
    if not x.j.is_identity:
        raise DomainError("square is a signed Pauli only for rotations X_0k")
    return x.k.with_phase(1)


def conjugate_pauli(x: Rotation | UnitRotation, s: PauliOp) -> SignedPauli:
    """X s X^-1 computed symbolically from (anti)commutation signs."""
    r = _as_unit(x).rotation
    if s.n_qubits != r.n_qubits:
        raise DomainError("qubit count mismatch")
    eps_jl = 1 if commutes(r.j, s) else -1
    eps_kl = 1 if commutes(r.k, s) else -1
    sign = 0 if eps_jl == 1 else 2
    if eps_jl * eps_kl == 1:
        return s.with_phase(s.phase_exp + sign)
    prod = multiply(multiply(s, r.j), r.k)
    return prod.with_phase(prod.phase_exp + 3 + sign)


def anchor_triple(b: Rotation | UnitRotation, a: Rotation | UnitRotation):
    """Check the shared-anchor layout X_mk, X_mj with S_j, S_k anticommuting.

    Returns (m, j, k, l) with S_l the third member of the anticommuting triple.
    """
    rb, ra = _as_unit(b).rotation, _as_unit(a).rotation
    if rb.j != ra.j:
        raise DomainError(f"{rb} and {ra} do not share an anchor Pauli")
    m, k, j = rb.j, rb.k, ra.k
    if commutes(j, k):
        raise DomainError(f"{j} and {k} commute; no anticommuting triple")
    l = multiply(j, k).unsigned()
    return m, j, k, l


def conjugate_rotation(
    b: Rotation | UnitRotation, a: Rotation | UnitRotation, require_anchor: bool = False
) -> UnitRotation:
    """b a b^-1 as a unit times a rotation (X_ml or its inverse -i X_lm)."""
    if require_anchor:
        anchor_triple(b, a)
    ua = _as_unit(a)
    if ua.rotation.n_qubits != _as_unit(b).rotation.n_qubits:
        raise DomainError("qubit count mismatch")
    p1 = conjugate_pauli(b, ua.rotation.j)
    p2 = conjugate_pauli(b, ua.rotation.k)
    # conjugates of Hermitian Paulis are Hermitian, so both units are +-1
    assert p1.phase_exp in (0, 2) and p2.phase_exp in (0, 2)
    q1, q2 = p1.unsigned(), p2.unsigned()
    if (p2.phase_exp - p1.phase_exp) % 4 == 0:
        return UnitRotation(Rotation(q1, q2), ua.phase + p1.phase_exp)
    return UnitRotation(Rotation(q2, q1), ua.phase + p1.phase_exp + 3)


def enumerate_rotations(
    n_qubits: int, cap: int = DEFAULT_CAPS.rotation_qubits, primitive_only: bool = False
) -> list[Rotation]:
    check_cap(n_qubits, cap, "n_qubits")
    paulis = all_paulis(n_qubits)
    out = []
    for j in paulis:
        if primitive_only and not j.is_identity:
            continue
        for k in paulis:
            if j != k and commutes(j, k):
                out.append(Rotation(j, k))
    return out


# -- projective group closure -------------------------------------------------


def _item_keys(re: np.ndarray, im: np.ndarray) -> list[bytes]:
    b = re.shape[0]
    flat = np.concatenate([re.reshape(b, -1), im.reshape(b, -1)], axis=1)
    flat = np.ascontiguousarray(flat, dtype=np.int64)
    return [row.tobytes() for row in flat]


def vector_keys(re: np.ndarray, im: np.ndarray) -> list[bytes]:
    """Projective keys for a batch of vectors with power-of-two norms."""
    cr, ci, _ = projective_canonical_batch(re, im)
    return _item_keys(cr, ci)


@dataclass
class ClosureResult:
    dim: int
    re: np.ndarray
    im: np.ndarray
    k: np.ndarray
    generators: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return int(self.re.shape[0])

    def element(self, idx: int) -> ExactMatrix:
        return ExactMatrix(self.re[idx], self.im[idx], int(self.k[idx]))

    def contains(self, mat: ExactMatrix) -> bool:
        key = _item_keys(*projective_canonical_batch(mat.re[None], mat.im[None])[:2])[0]
        return key in set(_item_keys(self.re, self.im))

    def state_images(self, state_re: np.ndarray, state_im: np.ndarray) -> list[bytes]:
        """Ray keys of g|psi> for every element g."""
        out_re = self.re @ state_re - self.im @ state_im
        out_im = self.re @ state_im + self.im @ state_re
        return vector_keys(out_re, out_im)

    def permutation_action(self, states) -> np.ndarray:
        """Row g gives the index of g|psi_s> among ``states`` for each s."""
        from .roadmap import state_arrays

        sre, sim = state_arrays(states)
        lookup = {key: i for i, key in enumerate(vector_keys(sre, sim))}
        perm = np.empty((self.order, len(states)), dtype=np.int64)
        for s in range(len(states)):
            keys = self.state_images(sre[s], sim[s])
            perm[:, s] = [lookup[key] for key in keys]
        return perm

    def report(self, states) -> dict:
        perm = self.permutation_action(states)
        orbit = set(perm[:, 0].tolist())
        stab = int((perm[:, 0] == 0).sum())
        kernel = int((perm == np.arange(len(states))).all(axis=1).sum())
        return {
            "order": self.order,
            "transitive": len(orbit) == len(states),
            "stabilizer_order": stab,
            "orbit_size": len(orbit),
            "kernel_order": kernel,
        }


def _as_matrix(g) -> ExactMatrix:
    if isinstance(g, ExactMatrix):
        return g
    return g.matrix


def group_closure(generators: Sequence, bound: int = DEFAULT_CAPS.closure_elements) -> ClosureResult:
    """Breadth-first projective closure of the generated group."""
    mats = [_as_matrix(g) for g in generators]
    if not mats:
        raise DomainError("need at least one generator")
    dim = mats[0].shape[0]
    ident = ExactMatrix.identity(dim)
    all_re, all_im, all_k = [ident.re], [ident.im], [0]
    seen = {_item_keys(ident.re[None], ident.im[None])[0]}
    frontier_re, frontier_im = ident.re[None], ident.im[None]
    frontier_k = np.zeros(1, dtype=np.int64)
    while frontier_re.shape[0]:
        new_re, new_im, new_k = [], [], []
        for g in mats:
            pr = frontier_re @ g.re - frontier_im @ g.im
            pi = frontier_re @ g.im + frontier_im @ g.re
            cr, ci, removed = projective_canonical_batch(pr, pi)
            ck = frontier_k + g.k - removed
            for idx, key in enumerate(_item_keys(cr, ci)):
                if key not in seen:
                    seen.add(key)
                    new_re.append(cr[idx])
                    new_im.append(ci[idx])
                    new_k.append(ck[idx])
            if len(seen) > bound:
                raise ResourceCapError(f"closure exceeded {bound} elements")
        if not new_re:
            break
        frontier_re, frontier_im = np.array(new_re), np.array(new_im)
        frontier_k = np.array(new_k, dtype=np.int64)
        all_re.extend(new_re)
        all_im.extend(new_im)
        all_k.extend(new_k)
    return ClosureResult(dim, np.array(all_re), np.array(all_im), np.array(all_k), list(generators))
