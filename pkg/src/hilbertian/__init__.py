"""Uniform discrete state sets of N-qubit Hilbert space.

Two independent constructions are provided: maximal pseudostabilizers with
their exact eigenbases and generalized pi/2 rotations, and shells of the E8
lattice read through a quaternionic Hopf map.
"""

from .config import DEFAULT_CAPS, Caps, DomainError, ResourceCapError, SearchExhausted
from .pauli import PauliOp, commutes, dense_matrix, multiply, pauli_from_index
from .pseudostabilizer import Pseudostabilizer, classify_two_qubit, count_formula, enumerate_maximal
from .ring import CycAmp, ExactMatrix
from .rotations import Rotation, conjugate_pauli, enumerate_rotations, group_closure, inverse
from .roadmap import build_polytope, build_roadmap, decompose_named_gate, navigate, synthesize
from .states import StateVector, eigenbasis

__all__ = [
    "Caps", "DEFAULT_CAPS", "DomainError", "ResourceCapError", "SearchExhausted",
    "PauliOp", "commutes", "dense_matrix", "multiply", "pauli_from_index",
    "Pseudostabilizer", "classify_two_qubit", "count_formula", "enumerate_maximal",
    "CycAmp", "ExactMatrix",
    "Rotation", "conjugate_pauli", "enumerate_rotations", "group_closure", "inverse",
    "build_polytope", "build_roadmap", "decompose_named_gate", "navigate", "synthesize",
    "StateVector", "eigenbasis",
]
