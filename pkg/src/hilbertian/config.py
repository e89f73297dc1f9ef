"""Resource caps and the exception types shared by every engine."""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceCapError(RuntimeError):
    """A request would exceed a configured size cap."""


class SearchExhausted(RuntimeError):
    """A search finished without reaching its target."""

    def __init__(self, message: str, explored: int = 0, depth: int = 0):
        super().__init__(message)
        self.explored = explored
        self.depth = depth


@dataclass(frozen=True)
class Caps:
    dense_qubits: int = 5
    enumerate_qubits: int = 4
    rotation_qubits: int = 3
    polytope_qubits: int = 3
    closure_qubits: int = 2
    shell_j: int = 6
    closure_elements: int = 10**6
    synth_depth: int = 12


DEFAULT_CAPS = Caps()


def check_cap(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise ResourceCapError(f"{what}={value} exceeds cap {cap}")
