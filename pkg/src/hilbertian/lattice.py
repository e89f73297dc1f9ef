"""Lattice route to the discrete state sets: 24-cell, Gosset polytope, E8 shells.

Quaternions carry integer numerators over a power of sqrt(2), so every
first-shell computation is exact.  A quaternion q = t0 + t1 j (t0, t1
complex, j acting on the right) is read as the complex pair (t0, t1).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CAPS, DomainError, check_cap
from .ring import CycAmp, canonical_gaussian_vector
from .states import StateVector


@dataclass(frozen=True)
class Quaternion:
    """(r + i*x + j*y + k*z) / sqrt(2)**e with integer numerators."""

    r: int
    i: int
    j: int
    k: int
    e: int = 0

    def __post_init__(self):
        c = (self.r, self.i, self.j, self.k)
        if not any(c):
            object.__setattr__(self, "e", 0)
            return
        e = self.e
        while e >= 2 and all(x % 2 == 0 for x in c):
            c = tuple(x // 2 for x in c)
            e -= 2
        for name, v in zip("rijk", c):
            object.__setattr__(self, name, v)
        object.__setattr__(self, "e", e)

    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return self.r, self.i, self.j, self.k

    def __mul__(self, o: Quaternion) -> Quaternion:
        a1, b1, c1, d1 = self.numerators
        a2, b2, c2, d2 = o.numerators
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            self.e + o.e,
        )

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.r, -self.i, -self.j, -self.k, self.e)

    def conj(self) -> Quaternion:
        return Quaternion(self.r, -self.i, -self.j, -self.k, self.e)

    def norm2(self) -> Fraction:
        return Fraction(sum(x * x for x in self.numerators), 2**self.e)

    def is_zero(self) -> bool:
        return not any(self.numerators)

    def to_float(self) -> np.ndarray:
        return np.array(self.numerators, dtype=float) / math.sqrt(2) ** self.e

    def complex_pair(self) -> tuple[CycAmp, CycAmp]:
        return CycAmp(self.r, self.i, self.e), CycAmp(self.j, self.k, self.e)


Q_ONE = Quaternion(1, 0, 0, 0)
Q_I = Quaternion(0, 1, 0, 0)
Q_J = Quaternion(0, 0, 1, 0)
Q_K = Quaternion(0, 0, 0, 1)
SCREW = Quaternion(1, 1, 0, 0, 1)  # (1+i)/sqrt(2), the pi/4 screw motion


def _t1_numerators():
    # unit 24-cell over sqrt(2)**2: axis points 2*e_a, half-sums (+-1,+-1,+-1,+-1)
    out = []
    for a in range(4):
        for s in (2, -2):
            v = [0, 0, 0, 0]
            v[a] = s
            out.append(tuple(v))
    out.extend(itertools.product((1, -1), repeat=4))
    return out


@lru_cache(maxsize=None)
def polytope_24cell(variant: str = "T1") -> tuple[Quaternion, ...]:
    """The 24 unit quaternions of T1 (Hurwitz units) or T2 = screw * T1."""
    t1 = tuple(Quaternion(*v, 2) for v in _t1_numerators())
    if variant.upper() == "T1":
        return t1
    if variant.upper() == "T2":
        return tuple(SCREW * q for q in t1)
    raise DomainError(f"unknown 24-cell variant {variant!r}")


def t2_direct() -> set[Quaternion]:
    """T2 read off as all permutations of (+-1,+-1,0,0)/sqrt(2)."""
    out = set()
    for a, b in itertools.combinations(range(4), 2):
        for sa, sb in itertools.product((1, -1), repeat=2):
            v = [0, 0, 0, 0]
            v[a], v[b] = sa, sb
            out.add(Quaternion(*v, 1))
    return out


def _ray_and_phase(v: StateVector) -> tuple[tuple, int]:
    """Canonical ray key and m with v == omega**m * (normalized canonical vector)."""
    g, big = v.gaussian_numerators()
    key = canonical_gaussian_vector(g)
    n2 = sum(a * a + b * b for a, b in key)
    ref = [CycAmp(a, b, n2.bit_length() - 1) for a, b in key]
    for m in range(8):
        w = _omega(m)
        if all((w * r) == x for r, x in zip(ref, v.amps)):
            return key, m
    raise DomainError("vector is not a unit multiple of its normalized ray")


def _omega(m: int) -> CycAmp:
    from .ring import OMEGA_POWERS

    return OMEGA_POWERS[m % 8]


@dataclass(frozen=True)
class PhysicalState:
    key: tuple
    state: StateVector
    preimages: tuple[tuple, ...]  # (tag, phase exponent m in units of pi/4)

    @property
    def multiplicity(self) -> int:
        return len(self.preimages)

    @property
    def phases(self) -> tuple[int, ...]:
        return tuple(sorted(m for _, m in self.preimages))


def _group_states(tagged) -> list[PhysicalState]:
    groups: dict[tuple, list] = {}
    for tag, v in tagged:
        key, m = _ray_and_phase(v)
        groups.setdefault(key, []).append((tag, m))
    out = []
    for key, pre in groups.items():
        state = StateVector(len(key).bit_length() - 1, tuple(CycAmp(a, b, 0) for a, b in key))
        out.append(PhysicalState(key, state, tuple(pre)))
    return out


def quaternion_to_qubit(q: Quaternion) -> StateVector:
    return StateVector(1, q.complex_pair())


def one_qubit_physical_states(variant: str = "T1") -> list[PhysicalState]:
    points = polytope_24cell(variant)
    return _group_states((idx, quaternion_to_qubit(q)) for idx, q in enumerate(points))


# -- Gosset polytope -----------------------------------------------------------


@dataclass(frozen=True)
class QuaternionPair:
    q1: Quaternion
    q2: Quaternion
    tag: int | None = None

    def norm2(self) -> Fraction:
        return self.q1.norm2() + self.q2.norm2()

    def real_octet(self) -> np.ndarray:
        return np.concatenate([self.q1.to_float(), self.q2.to_float()])

    def key8(self) -> tuple:
        """Exact octet as Fractions of 1/(2 sqrt 2): integer doubled-E8 coordinates."""
        return pair_to_e8(self).doubled


FIBER_UNITS = (Q_ONE, -Q_ONE, Q_I, -Q_I, Q_J, -Q_J, Q_K, -Q_K)
ZERO_Q = Quaternion(0, 0, 0, 0)


@lru_cache(maxsize=None)
def gosset_shell() -> tuple[QuaternionPair, ...]:
    """240 unit pairs in the fibers S1..S10."""
    t1 = [Quaternion(q.r, q.i, q.j, q.k, q.e + 1) for q in polytope_24cell("T1")]
    t2 = polytope_24cell("T2")
    out = [QuaternionPair(q, ZERO_Q, 1) for q in t2]
    out += [QuaternionPair(ZERO_Q, q, 2) for q in t2]
    for m, u in enumerate(FIBER_UNITS, start=3):
        out += [QuaternionPair(x, u * x, m) for x in t1]
    return tuple(out)


def fibers() -> dict[int, list[QuaternionPair]]:
    out: dict[int, list[QuaternionPair]] = {}
    for p in gosset_shell():
        out.setdefault(p.tag, []).append(p)
    return out


def pair_to_state(p: QuaternionPair) -> StateVector:
    t00, t01 = p.q1.complex_pair()
    t10, t11 = p.q2.complex_pair()
    return StateVector(2, (t00, t01, t10, t11))


@dataclass(frozen=True)
class BasePoint:
    x: tuple[float, float, float, float, float]

    @property
    def concurrence(self) -> float:
        return math.hypot(self.x[3], self.x[4])


def hopf_map(p: QuaternionPair) -> BasePoint:
    """conj(q1 q2^-1) followed by inverse stereographic projection to S^4."""
    if p.q2.is_zero():
        return BasePoint((1.0, 0.0, 0.0, 0.0, 0.0))
    q1, q2 = p.q1.to_float(), p.q2.to_float()
    n1, n2 = float(q1 @ q1), float(q2 @ q2)
    # conj(q1 q2^-1) = q2 conj(q1) / |q2|^2
    prod = _hamilton(q2, q1 * np.array([1, -1, -1, -1]))
    big_q = prod / n2
    qq = n1 / n2
    x0 = (qq - 1.0) / (qq + 1.0)
    rest = 2.0 * big_q / (qq + 1.0)
    return BasePoint((x0, *map(float, rest)))


def _hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a1, b1, c1, d1 = a
    a2, b2, c2, d2 = b
    return np.array([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])


def concurrence2(v: StateVector) -> Fraction:
    """Squared concurrence 4|t00 t11 - t01 t10|^2 / <v|v>^2, exact."""
    g, _ = v.gaussian_numerators()
    (a0, b0), (a1, b1), (a2, b2), (a3, b3) = g
    dr = (a0 * a3 - b0 * b3) - (a1 * a2 - b1 * b2)
    di = (a0 * b3 + b0 * a3) - (a1 * b2 + b1 * a2)
    n2 = sum(a * a + b * b for a, b in g)
    if n2 == 0:
        raise DomainError("zero vector")
    return Fraction(4 * (dr * dr + di * di), n2 * n2)


def concurrence(v: StateVector) -> float:
    if v.n_qubits != 2:
        raise DomainError("concurrence is defined here for two qubits")
    return math.sqrt(concurrence2(v))


def classify_concurrence(c2: Fraction) -> str:
    if c2 == 0:
        return "separable"
    if c2 == 1:
        return "mes"
    return "partial"


@dataclass
class QuotientReport:
    rays: list[PhysicalState]

    def by_class(self) -> dict[str, list[PhysicalState]]:
        out: dict[str, list[PhysicalState]] = {}
        for r in self.rays:
            out.setdefault(classify_concurrence(concurrence2(r.state)), []).append(r)
        return out

    def multiplicities(self) -> Counter:
        return Counter(r.multiplicity for r in self.rays)

    def to_json(self) -> dict:
        rays = []
        for r in self.rays:
            rays.append({
                "state": [list(a) for a in r.key],
                "class": classify_concurrence(concurrence2(r.state)),
                "preimages": [{"fiber": t, "phase": m} for t, m in r.preimages],
            })
        return {"count": len(self.rays), "rays": rays}


def physical_states(shell=None) -> QuotientReport:
    shell = gosset_shell() if shell is None else shell
    rays = _group_states((p.tag, pair_to_state(p)) for p in shell)
    rays.sort(key=lambda r: r.key)
    return QuotientReport(rays)


MAGIC_BASIS = {
    # value = numerators / sqrt(2)
    1: ((1, 0), (0, 0), (0, 0), (1, 0)),
    2: ((0, 1), (0, 0), (0, 0), (0, -1)),
    3: ((0, 0), (1, 0), (1, 0), (0, 0)),
    4: ((0, 0), (0, 1), (0, -1), (0, 0)),
}


def magic_state(l: int) -> StateVector:
    return StateVector(2, tuple(CycAmp(a, b, 1) for a, b in MAGIC_BASIS[l]))


@dataclass
class CrosscheckReport:
    matched: int
    total_lattice: int
    total_polytope: int
    unmatched_lattice: list = field(default_factory=list)
    unmatched_polytope: list = field(default_factory=list)
    class_agreement: bool = True

    @property
    def perfect(self) -> bool:
        return (
            self.matched == self.total_lattice == self.total_polytope
            and not self.unmatched_lattice
            and self.class_agreement
        )

    def summary(self) -> str:
        return f"{self.matched}/{self.total_polytope} matched"

    def to_json(self) -> dict:
        return {
            "matched": self.matched,
            "lattice": self.total_lattice,
            "polytope": self.total_polytope,
            "unmatched_lattice": self.unmatched_lattice,
            "unmatched_polytope": self.unmatched_polytope,
            "class_agreement": self.class_agreement,
            "perfect": self.perfect,
        }


def crosscheck_with_polytope(report: QuotientReport | None = None, h2=None) -> CrosscheckReport:
    from .pseudostabilizer import Entanglement, classify_two_qubit
    from .roadmap import build_polytope

    report = physical_states() if report is None else report
    h2 = build_polytope(2) if h2 is None else h2
    poly_keys = {v.key(): lab for v, (lab, _) in zip(h2.states, h2.origin)}
    entangled = {s.label for s in h2.sets if classify_two_qubit(s) is Entanglement.ENTANGLED}
    lattice_keys = {r.key: r for r in report.rays}
    matched = set(lattice_keys) & set(poly_keys)
    agree = True
    for key in matched:
        cls = classify_concurrence(concurrence2(lattice_keys[key].state))
        if (cls == "mes") != (poly_keys[key] in entangled) or cls == "partial":
            agree = False
    return CrosscheckReport(
        matched=len(matched),
        total_lattice=len(lattice_keys),
        total_polytope=len(poly_keys),
        unmatched_lattice=sorted(map(list, set(lattice_keys) - matched)),
        unmatched_polytope=sorted(map(list, set(poly_keys) - matched)),
        class_agreement=agree,
    )


# -- E8 shells -----------------------------------------------------------------


def _is_e8_doubled(w) -> bool:
    parity = {x % 2 for x in w}
    return len(parity) == 1 and sum(w) % 4 == 0


@dataclass(frozen=True)
class E8Point:
    """Point of E8 stored as twice its coordinates (all even or all odd)."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        if len(self.doubled) != 8 or not _is_e8_doubled(self.doubled):
            raise DomainError(f"{self.doubled} is not an E8 point")

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    @property
    def norm2(self) -> Fraction:
        return Fraction(sum(x * x for x in self.doubled), 4)

    @property
    def shell(self) -> int:
        return int(self.norm2 / 2)

    def gaussian_quadruplet(self) -> list[tuple[int, int]]:
        w = self.doubled
        return [(w[2 * a], w[2 * a + 1]) for a in range(4)]

    def to_state(self) -> StateVector:
        """The (unnormalized) two-qubit state from consecutive coordinate pairs."""
        return StateVector(2, tuple(CycAmp(a, b, 0) for a, b in self.gaussian_quadruplet()))


def pair_to_e8(p: QuaternionPair) -> E8Point:
    """sqrt(2) times the pair, as an E8 point in the even coordinate system."""
    out = []
    for q in (p.q1, p.q2):
        for x in q.numerators:
            # doubled coordinate 2*sqrt(2)*x/sqrt(2)**e = x * 2**((3-e)/2)
            if x == 0:
                out.append(0)
                continue
            if (3 - q.e) % 2 or q.e > 3:
                raise DomainError("pair is not a rescaled first-shell point")
            out.append(x * 2 ** ((3 - q.e) // 2))
    return E8Point(tuple(out))


def shell_count_formula(J: int) -> int:
    return 240 * sum(d**3 for d in range(1, J + 1) if J % d == 0)


def _norm_vectors(total: int, parity: int, length: int):
    vals = [v for v in range(-math.isqrt(total), math.isqrt(total) + 1) if v % 2 == parity]
    floor = 1 if parity else 0
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for v in vals:
            rest = remaining - v * v
            if rest < floor * (slots - 1):
                continue
            prefix.append(v)
            rec(prefix, rest, slots - 1)
            prefix.pop()

    rec([], total, length)
    return out


@lru_cache(maxsize=None)
def _e8_shell(J: int) -> tuple[E8Point, ...]:
    pts = []
    for parity in (0, 1):
        for w in _norm_vectors(8 * J, parity, 8):
            if sum(w) % 4 == 0:
                pts.append(E8Point(w))
    pts.sort(key=lambda p: p.doubled)
    return tuple(pts)


def e8_shell(J: int, cap: int = DEFAULT_CAPS.shell_j) -> list[E8Point]:
    if J < 1:
        raise DomainError("shell index must be >= 1")
    check_cap(J, cap, "J")
    return list(_e8_shell(J))


def is_visible(p: E8Point) -> bool:
    g = math.gcd(*p.doubled)
    J = p.shell
    for k in range(2, g + 1):
        if g % k == 0 and J % (k * k) == 0 and _is_e8_doubled([x // k for x in p.doubled]):
            return False
    return True


def visible_filter(points) -> list[E8Point]:
    return [p for p in points if is_visible(p)]


@dataclass
class Spectrum:
    J: int
    exact: list[Fraction]  # squared concurrences

    @property
    def values(self) -> list[float]:
        return [math.sqrt(c) for c in self.exact]

    def labels(self) -> list[str]:
        return [_sqrt_label(c) for c in self.exact]

    def to_json(self) -> dict:
        return {
            "J": self.J,
            "c2": [str(c) for c in self.exact],
            "concurrence": self.values,
            "labels": self.labels(),
        }


def _sqrt_label(c2: Fraction) -> str:
    num, den = c2.numerator, c2.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    top = str(rn) if rn * rn == num else f"√{num}"
    bottom = str(rd) if rd * rd == den else f"√{den}"
    if bottom == "1":
        return top
    return f"{top}/{bottom}"


def shell_concurrence_spectrum(J: int, cap: int = DEFAULT_CAPS.shell_j) -> Spectrum:
    pts = visible_filter(e8_shell(J, cap))
    values = sorted({concurrence2(p.to_state()) for p in pts})
    return Spectrum(J, values)


def sqrt8_reading(spectrum: Spectrum) -> str:
    """Which reading of the printed shell-3 value 'sqrt8/3' the spectrum contains."""
    has_a = Fraction(8, 9) in spectrum.exact  # sqrt(8)/3
    has_b = Fraction(8, 3) in spectrum.exact  # sqrt(8/3) > 1, impossible
    if has_a and not has_b:
        return "sqrt(8)/3"
    if has_b and not has_a:
        return "sqrt(8/3)"
    return "neither" if not (has_a or has_b) else "both"


def bloch_vector(v: StateVector) -> tuple[Fraction, Fraction, Fraction]:
    """(x0, x1, x2) of the Hopf base: first-qubit reduced Bloch vector, exact."""
    g, _ = v.gaussian_numerators()
    (a0, b0), (a1, b1), (a2, b2), (a3, b3) = g
    n2 = sum(a * a + b * b for a, b in g)
    x0 = Fraction(a0 * a0 + b0 * b0 + a1 * a1 + b1 * b1 - a2 * a2 - b2 * b2 - a3 * a3 - b3 * b3, n2)
    # t10 conj(t00) + t11 conj(t01)
    re = a2 * a0 + b2 * b0 + a3 * a1 + b3 * b1
    im = b2 * a0 - a2 * b0 + b3 * a1 - a3 * b1
    return x0, Fraction(2 * re, n2), Fraction(2 * im, n2)


def bloch_ball_discretization(J: int, cap: int = DEFAULT_CAPS.shell_j) -> Counter:
    """Bloch vectors of the first qubit over shells 1..J, with multiplicities."""
    out: Counter = Counter()
    for shell in range(1, J + 1):
        for p in visible_filter(e8_shell(shell, cap)):
            out[bloch_vector(p.to_state())] += 1
    return out


def shell_csv(J: int, cap: int = DEFAULT_CAPS.shell_j) -> str:
    lines = ["J,x1,x2,x3,x4,x5,x6,x7,x8,visible,concurrence,class"]
    for p in e8_shell(J, cap):
        c2 = concurrence2(p.to_state())
        coords = ",".join(str(c) for c in p.coords)
        lines.append(
            f"{J},{coords},{int(is_visible(p))},{math.sqrt(c2):.12g},{classify_concurrence(c2)}"
        )
    return "\n".join(lines) + "\n"


def fiber_report() -> dict:
    out = {}
    for tag, pts in sorted(fibers().items()):
        classes = Counter(classify_concurrence(concurrence2(pair_to_state(p))) for p in pts)
        out[str(tag)] = {"size": len(pts), "classes": dict(classes)}
    return {"total": sum(v["size"] for v in out.values()), "fibers": out}


def bloch_csv(points: Counter) -> str:
    lines = ["x0,x1,x2,radius2,multiplicity"]
    for pt in sorted(points):
        r2 = sum(c * c for c in pt)
        lines.append(",".join(str(c) for c in pt) + f",{r2},{points[pt]}")
    return "\n".join(lines) + "\n"
