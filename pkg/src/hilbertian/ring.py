"""Exact arithmetic over Gaussian integers scaled by powers of 1/sqrt(2).

A scalar ``CycAmp(re, im, k)`` has value ``(re + i*im) / sqrt(2)**k``.  This
contains the eighth root of unity ``omega = (1+i)/sqrt(2)`` and every
amplitude, overlap and gate entry met in the pseudostabilizer construction.

``ExactMatrix`` is the array counterpart: a Gaussian-integer numerator array
with a single common exponent.  All matrices we build (Paulis, rotations,
their products, rank-1 projectors) have a uniform exponent, so numpy integer
arithmetic on the numerators stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .config import DomainError

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class CycAmp:
    re: int
    im: int
    k: int = 0

    def __post_init__(self):
        re, im, k = int(self.re), int(self.im), int(self.k)
        if re == 0 and im == 0:
            k = 0
        while k < 0:
            re, im, k = 2 * re, 2 * im, k + 2
        while k >= 2 and re % 2 == 0 and im % 2 == 0:
            re, im, k = re // 2, im // 2, k - 2
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "k", k)

    @property
    def sqrt2_exp(self) -> int:
        return self.k

    @classmethod
    def coerce(cls, x: CycAmp | int) -> CycAmp:
        if isinstance(x, CycAmp):
            return x
        if isinstance(x, (int, np.integer)):
            return cls(int(x), 0, 0)
        return NotImplemented

    def _align(self, other: CycAmp) -> tuple[int, int, int, int, int]:
        if (self.k - other.k) % 2:
            raise DomainError(
                f"cannot add {self} and {other}: sqrt(2) exponents differ in parity"
            )
        k = max(self.k, other.k)
        s = 2 ** ((k - self.k) // 2)
        t = 2 ** ((k - other.k) // 2)
        return self.re * s, self.im * s, other.re * t, other.im * t, k

    def __add__(self, other):
        other = CycAmp.coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b, c, d, k = self._align(other)
        return CycAmp(a + c, b + d, k)

    __radd__ = __add__

    def __neg__(self) -> CycAmp:
        return CycAmp(-self.re, -self.im, self.k)

    def __sub__(self, other):
        other = CycAmp.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = CycAmp.coerce(other)
        if other is NotImplemented:
            return other
        return CycAmp(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.k + other.k,
        )

    __rmul__ = __mul__

    def conj(self) -> CycAmp:
        return CycAmp(self.re, -self.im, self.k)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def abs2(self) -> CycAmp:
        """Exact squared modulus (a real element)."""
        return CycAmp(self.re * self.re + self.im * self.im, 0, 2 * self.k)

    def abs2_value(self) -> Fraction:
        """Squared modulus (re^2 + im^2) / 2**k, always rational."""
        return Fraction(self.re * self.re + self.im * self.im, 2**self.k)

    def __abs__(self) -> float:
        return abs(complex(self))

    def __complex__(self) -> complex:
        return complex(self.re, self.im) / SQRT2**self.k

    def unit_exponent(self) -> int | None:
        """Return m with self == omega**m, or None if self is not such a unit."""
        for m in range(8):
            if OMEGA_POWERS[m] == self:
                return m
        return None

    def gaussian(self) -> tuple[int, int, int]:
        return self.re, self.im, self.k

    def __str__(self) -> str:
        num = f"({self.re}{self.im:+d}i)"
        return num if self.k == 0 else f"{num}/√2^{self.k}"


ZERO = CycAmp(0, 0, 0)
ONE = CycAmp(1, 0, 0)
I_UNIT = CycAmp(0, 1, 0)
OMEGA = CycAmp(1, 1, 1)
OMEGA_POWERS = [ONE]
for _ in range(7):
    OMEGA_POWERS.append(OMEGA_POWERS[-1] * OMEGA)
INV_SQRT2 = CycAmp(1, 0, 1)


def i_power(m: int) -> tuple[int, int]:
    return ((1, 0), (0, 1), (-1, 0), (0, -1))[m % 4]


# -- Gaussian integers -------------------------------------------------------


def _round_div(a: int, b: int) -> int:
    return (2 * a + b) // (2 * b)


def gauss_divmod(a: tuple[int, int], b: tuple[int, int]):
    ar, ai = a
    br, bi = b
    n = br * br + bi * bi
    qr = _round_div(ar * br + ai * bi, n)
    qi = _round_div(ai * br - ar * bi, n)
    rr = ar - (qr * br - qi * bi)
    ri = ai - (qr * bi + qi * br)
    return (qr, qi), (rr, ri)


def gauss_gcd(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    while b != (0, 0):
        _, r = gauss_divmod(a, b)
        a, b = b, r
    return a


def gauss_content(entries) -> tuple[int, int]:
    g = (0, 0)
    for e in entries:
        g = gauss_gcd(g, e)
        if g[0] * g[0] + g[1] * g[1] == 1:
            break
    return g


def gauss_exact_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    q, r = gauss_divmod(a, b)
    if r != (0, 0):
        raise DomainError(f"{a} is not divisible by {b}")
    return q


def unit_to_first_quadrant(a: int, b: int) -> int:
    """Power m of i such that i**(-m) * (a+bi) has argument in [0, pi/2)."""
    if a > 0 and b >= 0:
        return 0
    if a <= 0 and b > 0:
        return 1
    if a < 0 and b <= 0:
        return 2
    return 3


def times_i_power(z: tuple[int, int], m: int) -> tuple[int, int]:
    a, b = z
    for _ in range(m % 4):
        a, b = -b, a
    return a, b


def canonical_gaussian_vector(entries) -> tuple[tuple[int, int], ...]:
    """Primitive Gaussian vector on the same ray, first nonzero entry in [0, pi/2)."""
    entries = [(int(a), int(b)) for a, b in entries]
    g = gauss_content(entries)
    if g == (0, 0):
        raise DomainError("zero vector has no canonical ray")
    entries = [gauss_exact_div(e, g) for e in entries]
    first = next(e for e in entries if e != (0, 0))
    m = unit_to_first_quadrant(*first)
    return tuple(times_i_power(e, -m) for e in entries)


# -- numpy matrices ----------------------------------------------------------


class ExactMatrix:
    """Array with value (re + i*im) / sqrt(2)**k, exact integer numerators."""

    __slots__ = ("re", "im", "k")

    def __init__(self, re, im=None, k: int = 0):
        re = np.asarray(re, dtype=np.int64)
        im = np.zeros_like(re) if im is None else np.asarray(im, dtype=np.int64)
        while k >= 2 and not (re % 2).any() and not (im % 2).any():
            re, im, k = re // 2, im // 2, k - 2
        self.re = re
        self.im = im
        self.k = k

    @classmethod
    def identity(cls, dim: int) -> ExactMatrix:
        return cls(np.eye(dim, dtype=np.int64))

    @classmethod
    def from_complex_ints(cls, mat, k: int = 0) -> ExactMatrix:
        arr = np.asarray(mat, dtype=complex)
        re = np.rint(arr.real).astype(np.int64)
        im = np.rint(arr.imag).astype(np.int64)
        if not (np.allclose(re, arr.real) and np.allclose(im, arr.imag)):
            raise DomainError("entries are not Gaussian integers")
        return cls(re, im, k)

    @property
    def shape(self):
        return self.re.shape

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        a, b, c, d = self.re, self.im, other.re, other.im
        return ExactMatrix(a @ c - b @ d, a @ d + b @ c, self.k + other.k)

    def scale(self, z: CycAmp) -> ExactMatrix:
        return ExactMatrix(
            z.re * self.re - z.im * self.im, z.re * self.im + z.im * self.re, self.k + z.k
        )

    def times_i(self, m: int = 1) -> ExactMatrix:
        re, im = self.re, self.im
        for _ in range(m % 4):
            re, im = -im, re
        return ExactMatrix(re, im, self.k)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(-self.re, -self.im, self.k)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if (self.k - other.k) % 2:
            raise DomainError("cannot add matrices whose sqrt(2) exponents differ in parity")
        k = max(self.k, other.k)
        s = 2 ** ((k - self.k) // 2)
        t = 2 ** ((k - other.k) // 2)
        return ExactMatrix(self.re * s + other.re * t, self.im * s + other.im * t, k)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def dagger(self) -> ExactMatrix:
        return ExactMatrix(self.re.T.copy(), -self.im.T, self.k)

    def entry(self, *idx) -> CycAmp:
        return CycAmp(int(self.re[idx]), int(self.im[idx]), self.k)

    def to_complex(self) -> np.ndarray:
        return (self.re + 1j * self.im) / SQRT2**self.k

    def is_zero(self) -> bool:
        return not self.re.any() and not self.im.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return (
            self.k == other.k
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    __hash__ = None

    def projective_form(self) -> tuple[np.ndarray, np.ndarray, int]:
        """Representative of the class {omega**m * self}.

        Requires the numerator content to be a power of (1+i) times a unit,
        which holds for unitaries and for vectors of power-of-two norm.
        """
        re, im, k = projective_canonical_batch(self.re[None], self.im[None])
        return re[0], im[0], int(self.k - k[0])

    def projective_key(self) -> bytes:
        re, im, k = self.projective_form()
        return np.concatenate([re.ravel(), im.ravel(), [k]]).astype(np.int64).tobytes()

    def projectively_equal(self, other: ExactMatrix) -> int | None:
        """Return m with self == omega**m * other, or None."""
        if self.shape != other.shape:
            return None
        for m in range(8):
            if self == other.scale(OMEGA_POWERS[m]):
                return m
        return None

    def __repr__(self) -> str:
        return f"ExactMatrix(k={self.k}, value=\n{self.to_complex()})"


def projective_canonical_batch(re: np.ndarray, im: np.ndarray):
    """Strip (1+i)-content and fix the i**m unit of each leading-axis item.

    Returns the reduced numerators and, per item, how many factors of (1+i)
    were removed (each lowers the sqrt(2) exponent by one, projectively).
    """
    b = re.shape[0]
    fr = re.reshape(b, -1).copy()
    fi = im.reshape(b, -1).copy()
    removed = np.zeros(b, dtype=np.int64)
    while True:
        nonzero = (fr != 0).any(axis=1) | (fi != 0).any(axis=1)
        div = ((fr - fi) % 2 == 0).all(axis=1) & nonzero
        if not div.any():
            break
        r, i = fr[div], fi[div]
        fr[div], fi[div] = (r + i) // 2, (i - r) // 2
        removed[div] += 1
    nz = (fr != 0) | (fi != 0)
    first = nz.argmax(axis=1)
    a = fr[np.arange(b), first]
    c = fi[np.arange(b), first]
    # multiply by i**(-m); m chosen per item
    m = np.where(
        (a > 0) & (c >= 0), 0, np.where((a <= 0) & (c > 0), 1, np.where((a < 0) & (c <= 0), 2, 3))
    )
    out_r, out_i = fr.copy(), fi.copy()
    for mm, (sr, si) in ((1, (0, -1)), (2, (-1, 0)), (3, (0, 1))):
        sel = m == mm
        if sel.any():
            r, i = fr[sel], fi[sel]
            out_r[sel] = sr * r - si * i
            out_i[sel] = sr * i + si * r
    return out_r.reshape(re.shape), out_i.reshape(im.shape), removed
