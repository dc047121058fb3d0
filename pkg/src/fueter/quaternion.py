"""Quaternion arithmetic, slices and the representation formula.

Two scalar paths share one class: components may be ``Fraction``/``int``
(exact) or ``float``.  Vectorised float work uses plain ``(..., 4)`` numpy
arrays through :func:`qmul`, :func:`qconj` and :func:`embed`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational
from typing import Callable, Optional, Union

import numpy as np

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Quaternion:
    """q = w + x i + y j + z k."""

    w: Number = 0
    x: Number = 0
    y: Number = 0
    z: Number = 0

    # construction -----------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, complex):
            return cls(value.real, value.imag, 0.0, 0.0)
        if isinstance(value, (tuple, list, np.ndarray)):
            return cls(*(_scalar(v) for v in value))
        return cls(value, 0, 0, 0)

    @classmethod
    def from_complex(cls, z: complex, unit: Optional["Quaternion"] = None) -> "Quaternion":
        """Embed ``z = a + bi`` as ``a + b*unit`` (unit ``None`` means i)."""
        a, b = z.real, z.imag
        if unit is None:
            return cls(a, b, 0.0, 0.0)
        return cls(a, b * unit.x, b * unit.y, b * unit.z)

    # accessors --------------------------------------------------------

    @property
    def real(self):
        return self.w

    @property
    def vector(self) -> "Quaternion":
        return Quaternion(0 * self.w, self.x, self.y, self.z)

    def as_tuple(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def to_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.as_tuple()])

    def to_float(self) -> "Quaternion":
        return Quaternion(*(float(c) for c in self.as_tuple()))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Rational) for c in self.as_tuple())

    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    # algebra ----------------------------------------------------------

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def inverse(self) -> "Quaternion":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("quaternion inverse of zero")
        c = self.conj()
        return Quaternion(c.w / n, c.x / n, c.y / n, c.z / n)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self) -> "Quaternion":
        return self

    def __add__(self, other) -> "Quaternion":
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other) -> "Quaternion":
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other) -> "Quaternion":
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Quaternion":
        if _is_scalar(other):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            if isinstance(other, complex):
                other = Quaternion.coerce(other)
            else:
                return NotImplemented
        a1, b1, c1, d1 = self.as_tuple()
        a2, b2, c2, d2 = other.as_tuple()
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other) -> "Quaternion":
        if _is_scalar(other):
            return self * other
        if isinstance(other, complex):
            return Quaternion.coerce(other) * self
        return NotImplemented

    def __truediv__(self, other) -> "Quaternion":
        # right division: self * other^{-1}
        if _is_scalar(other):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return self * _as_quat(other).inverse()

    def __rtruediv__(self, other) -> "Quaternion":
        return _as_quat(other) * self.inverse()

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Quaternion(_one_like(self.w), 0 * self.w, 0 * self.w, 0 * self.w)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return self.as_tuple() == o.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def isclose(self, other, tol: float = 1e-12) -> bool:
        return abs(self - _as_quat(other)) <= tol

    def __repr__(self) -> str:
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.as_tuple())


QuaternionLike = Union[Quaternion, Number, complex]


def _is_scalar(v) -> bool:
    return isinstance(v, Number) and not isinstance(v, complex) or isinstance(v, np.floating)


def _scalar(v):
    if isinstance(v, np.generic):
        return v.item()
    return v


def _one_like(v):
    if isinstance(v, Fraction):
        return Fraction(1)
    if isinstance(v, float):
        return 1.0
    return 1


def _as_quat(v) -> Optional[Quaternion]:
    if isinstance(v, Quaternion):
        return v
    if _is_scalar(v) or isinstance(v, complex):
        return Quaternion.coerce(v)
    return None


ONE = Quaternion(1, 0, 0, 0)
QI = Quaternion(0, 1, 0, 0)
QJ = Quaternion(0, 0, 1, 0)
QK = Quaternion(0, 0, 0, 1)


def mul(a: QuaternionLike, b: QuaternionLike) -> Quaternion:
    """Hamilton product."""
    return Quaternion.coerce(a) * Quaternion.coerce(b)


def exact(q: QuaternionLike) -> Quaternion:
    """Quaternion with ``Fraction`` components (floats converted exactly)."""
    q = Quaternion.coerce(q)
    return Quaternion(*(Fraction(c) for c in q.as_tuple()))


# imaginary units and slices -----------------------------------------------


def imaginary_unit(x, y=None, z=None, tol: float = UNIT_TOL) -> Quaternion:
    """Validated element of the unit sphere of purely imaginary quaternions.

    Accepts either a Quaternion or three components.  Float input is
    normalised when it is within ``tol`` of unit length.
    """
    if y is None:
        q = Quaternion.coerce(x)
        if q.w != 0:
            raise ValueError("imaginary unit must have zero real part")
    else:
        q = Quaternion(0, x, y, z)
    n2 = q.norm2()
    if q.is_exact:
        if n2 != 1:
            raise ValueError(f"not a unit vector: |I|^2 = {n2}")
        return q
    n = math.sqrt(n2)
    if abs(n - 1.0) > tol:
        raise ValueError(f"not a unit vector: |I| = {n!r}")
    return Quaternion(0.0, q.x / n, q.y / n, q.z / n)


def random_unit(rng: np.random.Generator) -> Quaternion:
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return Quaternion(0.0, *(float(c) for c in v))


@dataclass(frozen=True)
class SlicePoint:
    """z = re + unit * im inside the slice of ``unit`` (im >= 0)."""

    unit: Quaternion
    re: float
    im: float

    def embed(self) -> Quaternion:
        u = self.unit
        return Quaternion(self.re, self.im * u.x, self.im * u.y, self.im * u.z)

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def _exact_sqrt(v: Fraction) -> Optional[Fraction]:
    n, d = v.numerator, v.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def slice_decompose(q: QuaternionLike):
    """Return ``(re, im, unit)`` with ``q = re + im*unit`` and ``im >= 0``.

    ``unit`` is ``None`` exactly when ``q`` is real.
    """
    q = Quaternion.coerce(q)
    if q.x == 0 and q.y == 0 and q.z == 0:
        return q.w, 0 * q.w, None
    if q.is_exact:
        im = _exact_sqrt(Fraction(q.x * q.x + q.y * q.y + q.z * q.z))
        if im is not None:
            return q.w, im, Quaternion(0 * im, q.x / im, q.y / im, q.z / im)
    # hypot avoids underflow of tiny imaginary parts
    im = math.hypot(float(q.x), float(q.y), float(q.z))
    return q.w, im, Quaternion(0.0, float(q.x) / im, float(q.y) / im, float(q.z) / im)


def to_slice(q: QuaternionLike, default_unit: Optional[Quaternion] = None):
    """Complex coordinate of ``q`` in its own slice, and that slice's unit.

    Real ``q`` lands in the slice of ``default_unit`` (i if not given).
    """
    re, im, unit = slice_decompose(q)
    if unit is None:
        unit = default_unit if default_unit is not None else QI
    return complex(float(re), float(im)), unit


def in_slice(z: complex, unit: Quaternion) -> Quaternion:
    return Quaternion.from_complex(z, unit)


def slice_holomorphic_eval(
    f: Callable[[complex], Union[complex, Quaternion]],
    q: QuaternionLike,
    J: Quaternion,
) -> Quaternion:
    """Extend a function given on the slice of ``J`` to all quaternions.

    ``f`` receives the complex coordinate ``x + iy`` of a point ``x + Jy``.
    Complex return values are read as elements of the slice of ``J``;
    Quaternion return values are used as they are.
    """
    re, im, unit = slice_decompose(q)

    def value(zz: complex) -> Quaternion:
        out = f(zz)
        if isinstance(out, Quaternion):
            return out
        return Quaternion.from_complex(complex(out), J)

    if unit is None:
        return value(complex(float(re), 0.0))
    z = complex(float(re), float(im))
    fz = value(z)
    fzb = value(z.conjugate())
    return (fz + fzb) * 0.5 + (unit * J) * ((fzb - fz) * 0.5)


def slice_exp(q: QuaternionLike, a: float, b: float, c: float) -> Quaternion:
    """``exp(a q^2 + b q + c)`` for real a, b, c."""
    z, unit = to_slice(q)
    return Quaternion.from_complex(cmath.exp(a * z * z + b * z + c), unit)


# vectorised float helpers ---------------------------------------------------


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of broadcastable ``(..., 4)`` arrays."""
    a1, b1, c1, d1 = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    a2, b2, c2, d2 = np.moveaxis(np.asarray(b, dtype=float), -1, 0)
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


def qconj(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def embed(z, unit: Quaternion) -> np.ndarray:
    """Complex array -> ``(..., 4)`` array inside the slice of ``unit``."""
    z = np.asarray(z, dtype=complex)
    u = unit.to_array()
    return np.stack([z.real, z.imag * u[1], z.imag * u[2], z.imag * u[3]], axis=-1)


def slice_bilinear(u, I: Quaternion, v, J: Quaternion) -> Quaternion:
    """``sum_k (u_k)_I (v_k)_J`` for complex sequences living in two slices."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    rr = float(np.sum(u.real * v.real))
    ri = float(np.sum(u.real * v.imag))
    ir = float(np.sum(u.imag * v.real))
    ii = float(np.sum(u.imag * v.imag))
    IJ = I * J
    return Quaternion(rr, 0.0, 0.0, 0.0) + J * ri + I * ir + IJ * ii


def from_array(a) -> Quaternion:
    a = np.asarray(a, dtype=float)
    return Quaternion(float(a[0]), float(a[1]), float(a[2]), float(a[3]))
