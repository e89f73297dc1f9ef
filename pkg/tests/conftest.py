import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

CRITERIA = {
    1: "set and state counts for N = 1..3 (N = 4 by formula)",
    2: "two-qubit golden tables: sets, classes, 60 eigenvectors",
    3: "rotation census (6, 120), unitarity and X^4 = -id",
    4: "Clifford normalizer, closures of order 24 and |G| = 60 |stab|",
    5: "H, S, CNOT decompositions, 9-term synonym, synthesis <= 9",
    6: "state-to-state reachability within N+1 rotations",
    7: "overlap magnitudes {0, 1/2, 1/sqrt2} and minimum distance pi/2",
    8: "Gosset fibers, 36 + 24 rays of multiplicity 4, magic basis",
    9: "lattice rays vs pseudostabilizer states: 60/60 bijection",
    10: "E8 shell counts, shell-2 and shell-3 concurrence spectra",
    11: "Bloch-ball octahedron, cube and cuboctahedron",
    12: "property suites: multiply oracle, resolution of identity, invariance",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        ok = call.excinfo is None
        for n in marker.args:
            _outcomes.setdefault(n, []).append(ok)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status:<7} {CRITERIA[n]} ({len(results or [])} checks)")


@pytest.fixture(scope="session")
def h1():
    from hilbertian.roadmap import build_polytope

    return build_polytope(1)


@pytest.fixture(scope="session")
def h2():
    from hilbertian.roadmap import build_polytope

    return build_polytope(2)


@pytest.fixture(scope="session")
def two_qubit_sets():
    from hilbertian.pseudostabilizer import enumerate_maximal

    return enumerate_maximal(2)
