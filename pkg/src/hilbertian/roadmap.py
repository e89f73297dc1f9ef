"""The discrete state set, its roadmap graph, navigation and gate synthesis."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CAPS, DomainError, SearchExhausted, check_cap
from .pauli import all_paulis
from .pseudostabilizer import Entanglement, Pseudostabilizer, classify_two_qubit, enumerate_maximal
from .ring import ExactMatrix, projective_canonical_batch
from .rotations import (
    Rotation,
    _item_keys,
    conjugate_pauli,
    enumerate_rotations,
    inverse,
    rotation_from_indices,
    vector_keys,
)
from .states import EigenvaluePattern, StateVector, apply, eigenbasis, same_ray


def state_arrays(states) -> tuple[np.ndarray, np.ndarray]:
    """Gaussian numerator arrays (n_states, dim) for a list of StateVectors."""
    rows = [s.gaussian_numerators()[0] for s in states]
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), -1, 2)
    return arr[:, :, 0].copy(), arr[:, :, 1].copy()


# -- polytope -----------------------------------------------------------------


@dataclass
class Polytope:
    n_qubits: int
    states: list[StateVector]
    origin: list[tuple[int, EigenvaluePattern]]
    sets: list[Pseudostabilizer]
    _lookup: dict[bytes, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._lookup:
            re, im = state_arrays(self.states)
            self._lookup = {k: i for i, k in enumerate(vector_keys(re, im))}

    def __len__(self) -> int:
        return len(self.states)

    def find(self, v: StateVector) -> int | None:
        if v.n_qubits != self.n_qubits or v.is_zero():
            return None
        re, im = state_arrays([v])
        return self._lookup.get(vector_keys(re, im)[0])

    def index_of(self, v: StateVector) -> int:
        idx = self.find(v)
        if idx is None:
            raise DomainError("state is not in the polytope")
        return idx

    def states_of_set(self, label: int) -> list[int]:
        return [i for i, (lab, _) in enumerate(self.origin) if lab == label]

    def transition_table(self, rotations) -> np.ndarray:
        """table[r, s] = index of rotations[r] |s> (canonicalized)."""
        sre, sim = state_arrays(self.states)
        table = np.empty((len(rotations), len(self.states)), dtype=np.int64)
        for r, rot in enumerate(rotations):
            m = rot if isinstance(rot, ExactMatrix) else rot.matrix
            ore = sre @ m.re.T - sim @ m.im.T
            oim = sre @ m.im.T + sim @ m.re.T
            row = [self._lookup.get(key) for key in vector_keys(ore, oim)]
            if None in row:
                raise AssertionError(f"{rot} maps a state outside the polytope")
            table[r] = row
        return table

    def to_json(self) -> dict:
        items = []
        for v, (lab, pat) in zip(self.states, self.origin):
            items.append({"set": lab, "pattern": list(pat.signs), "amps": v.to_json()["amps"]})
        return {"n": self.n_qubits, "count": len(self.states), "states": items}


def polytope_size(n_qubits: int) -> int:
    from .pseudostabilizer import count_formula

    return 2**n_qubits * count_formula(n_qubits)


@lru_cache(maxsize=None)
def _build_polytope(n_qubits: int) -> Polytope:
    sets = enumerate_maximal(n_qubits)
    states, origin, seen = [], [], set()
    for s in sets:
        for pat, v in eigenbasis(s):
            key = v.key()
            if key in seen:
                continue
            seen.add(key)
            states.append(v)
            origin.append((s.label, pat))
    return Polytope(n_qubits, states, origin, sets)


def build_polytope(n_qubits: int, cap: int = DEFAULT_CAPS.polytope_qubits) -> Polytope:
    if n_qubits < 1:
        raise DomainError("n_qubits must be >= 1")
    check_cap(n_qubits, cap, "n_qubits")
    return _build_polytope(n_qubits)


# -- roadmap ------------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    rotation: Rotation


@dataclass
class Roadmap:
    n_qubits: int
    nodes: list[int]
    entangled: set[int]
    edges: list[Edge]

    def neighbors(self, label: int) -> set[int]:
        return {e.b for e in self.edges if e.a == label}

    def degree(self, label: int) -> int:
        return len(self.neighbors(label))

    def edges_between(self, a: int, b: int) -> list[Edge]:
        return [e for e in self.edges if e.a == a and e.b == b]

    def is_connected(self) -> bool:
        adj: dict[int, set[int]] = {n: set() for n in self.nodes}
        for e in self.edges:
            adj[e.a].add(e.b)
        start = self.nodes[0]
        seen, queue = {start}, deque([start])
        while queue:
            for nb in adj[queue.popleft()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == len(self.nodes)


def _set_image_table(n: int, rotations) -> np.ndarray:
    """img[r, p] = index of the phase-free Pauli X_r S_p X_r^-1."""
    paulis = all_paulis(n)
    img = np.empty((len(rotations), len(paulis)), dtype=np.int64)
    for r, rot in enumerate(rotations):
        for p in paulis:
            img[r, p.index] = conjugate_pauli(rot, p).unsigned().index
    return img


@lru_cache(maxsize=None)
def _build_roadmap(n_qubits: int) -> Roadmap:
    poly = build_polytope(n_qubits)
    sets = poly.sets
    rotations = enumerate_rotations(n_qubits)
    img = _set_image_table(n_qubits, rotations)
    by_elements = {s.index_set: s.label for s in sets}
    table = poly.transition_table(rotations)
    state_set = np.array([lab for lab, _ in poly.origin])
    members = {s.label: np.array(poly.states_of_set(s.label)) for s in sets}
    elems = np.array([s.element_indices for s in sets])
    labels = [s.label for s in sets]
    edges = []
    for r, rot in enumerate(rotations):
        images = np.sort(img[r][elems], axis=1)
        for row, lab in zip(images, labels):
            target = by_elements[frozenset(row.tolist())]
            if target == lab:
                continue
            # exact transport check: every eigenvector lands in the target's basis
            if not (state_set[table[r, members[lab]]] == target).all():
                raise AssertionError(f"{rot} fails to transport set {lab}")
            edges.append((lab, target, r))
    edges = [Edge(a, b, rotations[r]) for a, b, r in sorted(edges)]
    entangled = set()
    if n_qubits == 2:
        entangled = {s.label for s in sets if classify_two_qubit(s) is Entanglement.ENTANGLED}
    return Roadmap(n_qubits, [s.label for s in sets], entangled, edges)


def build_roadmap(n_qubits: int, cap: int = DEFAULT_CAPS.polytope_qubits) -> Roadmap:
    check_cap(n_qubits, cap, "n_qubits")
    return _build_roadmap(n_qubits)


def export_dot(r: Roadmap) -> str:
    """Undirected DOT graph, one edge per neighbor pair with its first rotation."""
    lines = ["graph roadmap {", "  node [shape=triangle];"]
    for n in r.nodes:
        if n in r.entangled:
            lines.append(f'  {n} [label="{n}", style=filled, fillcolor=gray];')
        else:
            lines.append(f'  {n} [label="{n}"];')
    first: dict[tuple[int, int], Rotation] = {}
    for e in r.edges:
        pair = (min(e.a, e.b), max(e.a, e.b))
        if pair not in first or e.rotation.indices < first[pair].indices:
            first[pair] = e.rotation
    for (a, b), rot in sorted(first.items()):
        lines.append(f'  {a} -- {b} [label="{rot}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- gate sequences -----------------------------------------------------------


@dataclass
class GateSequence:
    n_qubits: int
    terms: list[tuple[Rotation, int]]
    target: str | None = None
    phase: int | None = None  # product == omega**phase * target when verified

    def __len__(self) -> int:
        return len(self.terms)

    def product(self) -> ExactMatrix:
        out = ExactMatrix.identity(2**self.n_qubits)
        for rot, exp in self.terms:
            out = out @ (rot.matrix if exp == 1 else inverse(rot).matrix)
        return out

    def verify(self, target: ExactMatrix) -> int | None:
        self.phase = self.product().projectively_equal(target)
        return self.phase

    @property
    def verified(self) -> bool:
        return self.phase is not None

    def __str__(self) -> str:
        if not self.terms:
            return "id"
        return " ".join(str(r) if e == 1 else f"({r})^-1" for r, e in self.terms)

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "n": self.n_qubits,
            "seq": [{"j": r.j.index, "k": r.k.index, "exp": e} for r, e in self.terms],
            "phase": self.phase,
            "verified": self.verified,
        }


def _m(rows) -> ExactMatrix:
    return ExactMatrix.from_complex_ints(np.array(rows, dtype=complex))


def standard_gate(name: str, n_qubits: int | None = None) -> ExactMatrix:
    """Named gate; one-qubit gates act on the last qubit, CNOT on the first two.

    S is the phase gate diag(1+i, 1-i)/sqrt(2).
    """
    name = name.upper()
    if name == "H":
        g = ExactMatrix(_m([[1, 1], [1, -1]]).re, None, 1)
    elif name == "S":
        g = ExactMatrix(_m([[1 + 1j, 0], [0, 1 - 1j]]).re, _m([[1 + 1j, 0], [0, 1 - 1j]]).im, 1)
    elif name in ("I", "ID"):
        g = ExactMatrix.identity(2)
    elif name == "CNOT":
        g = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    else:
        raise DomainError(f"unknown gate {name!r}")
    width = 2 if name == "CNOT" else 1
    n = width if n_qubits is None else n_qubits
    if n < width:
        raise DomainError(f"{name} needs at least {width} qubits")
    extra = 2 ** (n - width)
    if extra == 1:
        return g
    ident = np.eye(extra, dtype=np.int64)
    if width == 1:
        return ExactMatrix(np.kron(ident, g.re), np.kron(ident, g.im), g.k)
    return ExactMatrix(np.kron(g.re, ident), np.kron(g.im, ident), g.k)


_NAMED = {
    "H": (1, [((0, 2), 1), ((0, 1), 1), ((2, 0), -1)]),
    "S": (1, [((0, 1), 1)]),
    "CNOT": (2, [((0, 2), -1), ((0, 6), 1), ((0, 4), -1)]),
}

# CNOT written only in rotations reachable from a five-term Hamiltonian
CNOT_SYNONYM = [
    ((0, 2), -1), ((0, 1), 1), ((0, 2), 1), ((0, 1), -1), ((0, 5), 1),
    ((0, 1), -1), ((0, 2), 1), ((0, 1), 1), ((0, 4), -1),
]


def sequence_from_indices(n_qubits: int, words, target: str | None = None) -> GateSequence:
    terms = [(rotation_from_indices(n_qubits, j, k), e) for (j, k), e in words]
    return GateSequence(n_qubits, terms, target)


def decompose_named_gate(name: str) -> GateSequence:
    key = name.upper()
    if key not in _NAMED:
        raise DomainError(f"unknown gate {name!r}; expected H, S or CNOT")
    n, words = _NAMED[key]
    seq = sequence_from_indices(n, words, key)
    seq.verify(standard_gate(key, n))
    return seq


def synthesize(
    target: ExactMatrix,
    generators: list[Rotation],
    max_depth: int = DEFAULT_CAPS.synth_depth,
    target_name: str | None = None,
) -> GateSequence:
    """Shortest generator word equal to ``target`` up to a power of omega.

    Breadth-first over group elements in shortlex order: generators in the
    given order, +1 before -1, so the first hit is the lexicographically
    least among the shortest words.
    """
    if not generators:
        raise DomainError("need at least one generator")
    n = generators[0].n_qubits
    if any(g.n_qubits != n for g in generators):
        raise DomainError("generators act on different qubit counts")
    if target.shape != (2**n, 2**n):
        raise DomainError("target dimension does not match the generators")
    moves = []
    for g in generators:
        moves.append((g, 1, g.matrix))
        moves.append((g, -1, inverse(g).matrix))

    def keys_of(re, im):
        cr, ci, _ = projective_canonical_batch(re, im)
        return cr, ci, _item_keys(cr, ci)

    tre, tim, tkeys = keys_of(target.re[None], target.im[None])
    goal = tkeys[0]
    ident = ExactMatrix.identity(2**n)
    fre, fim, fkeys = keys_of(ident.re[None], ident.im[None])
    parent: dict[bytes, tuple[bytes, int] | None] = {fkeys[0]: None}

    def word(key: bytes) -> GateSequence:
        terms = []
        while parent[key] is not None:
            key, mv = parent[key]
            terms.append((moves[mv][0], moves[mv][1]))
        seq = GateSequence(n, terms[::-1], target_name)
        seq.verify(target)
        return seq

    if goal in parent:
        return word(goal)
    depth = 0
    while fre.shape[0] and depth < max_depth:
        depth += 1
        layer = [keys_of(fre @ m.re - fim @ m.im, fre @ m.im + fim @ m.re) for _, _, m in moves]
        nre, nim = [], []
        for b, pkey in enumerate(fkeys):
            for mv, (cr, ci, ks) in enumerate(layer):
                key = ks[b]
                if key in parent:
                    continue
                parent[key] = (pkey, mv)
                if key == goal:
                    return word(goal)
                nre.append(cr[b])
                nim.append(ci[b])
        if not nre:
            break
        fre, fim = np.array(nre), np.array(nim)
        fkeys = _item_keys(fre, fim)
    raise SearchExhausted(
        f"target not reached (explored {len(parent)} elements, depth {depth})",
        explored=len(parent),
        depth=depth,
    )


# -- navigation ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _navigation_data(n_qubits: int):
    poly = build_polytope(n_qubits)
    rotations = enumerate_rotations(n_qubits)
    return poly, rotations, poly.transition_table(rotations)


@lru_cache(maxsize=None)
def distances_from(n_qubits: int, source: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """BFS over the state graph: (distance, parent state, parent rotation)."""
    poly, rotations, table = _navigation_data(n_qubits)
    size = len(poly)
    dist = np.full(size, -1, dtype=np.int64)
    par = np.full(size, -1, dtype=np.int64)
    via = np.full(size, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        s = queue.popleft()
        for r in range(len(rotations)):
            t = table[r, s]
            if dist[t] < 0:
                dist[t], par[t], via[t] = dist[s] + 1, s, r
                queue.append(t)
    return dist, par, via


def navigate(a: StateVector, b: StateVector) -> GateSequence:
    """Rotation word W with W|a> = |b> up to phase, of minimal length."""
    if a.n_qubits != b.n_qubits:
        raise DomainError("qubit count mismatch")
    poly, rotations, _ = _navigation_data(a.n_qubits)
    src, dst = poly.index_of(a), poly.index_of(b)
    _, par, via = distances_from(a.n_qubits, src)
    applied = []
    node = dst
    while node != src:
        applied.append(rotations[int(via[node])])
        node = int(par[node])
    # product order: the last rotation applied is leftmost
    seq = GateSequence(a.n_qubits, [(r, 1) for r in applied])
    out = apply(seq.product(), a)
    if not same_ray(out, b):
        raise AssertionError("navigation word failed exact verification")
    return seq
