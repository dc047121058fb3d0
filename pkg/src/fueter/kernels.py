"""Fock, Fock-Fueter, slice Bergman, Bergman-Fueter and RKHS kernels.

Every kernel here is a sum of products ``u(q) v(r)`` with ``u`` living in the
slice of ``q`` and ``v`` in the slice of ``r``; the computation is done in
complex arithmetic on each slice and mixed once at the end
(``_mix``).  Truncated series come with a tail bound (``*_tail``).

Measure conventions: the ball, half ball and wedge kernels reproduce with
respect to the normalised slice measure ``dA/pi``.  The half-space kernels
accept ``measure="lebesgue"`` (default, carries ``1/pi``) or
``measure="normalized"`` (no ``1/pi``, the summand of the half-ball kernel).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .appell import appell_values, exp_tail_bound
from .quaternion import Quaternion, QuaternionLike, embed, from_array, qmul, slice_holomorphic_eval, to_slice

DEFAULT_TRUNCATION = 300


class DomainError(ValueError):
    """Point outside the kernel's domain."""


KERNEL_NAMES = (
    "fock",
    "fock_fueter",
    "bergman_ball",
    "bergman_halfspace",
    "bergman_halfball",
    "bergman_wedge",
    "bergman_fueter_ball",
    "bergman_fueter_halfspace",
    "bergman_fueter_halfball",
    "rkhs_G",
    "rkhs_L",
)


@dataclass(frozen=True)
class KernelSpec:
    name: str
    truncation: int = DEFAULT_TRUNCATION
    form: str = "closed"
    wedge_n: int = 1

    def __post_init__(self):
        if self.name not in KERNEL_NAMES:
            raise ValueError(f"unknown kernel {self.name!r}")
        if self.form not in ("series", "closed"):
            raise ValueError("form must be 'series' or 'closed'")
        if self.wedge_n < 1:
            raise ValueError("wedge order must be >= 1")
        if self.truncation < 0:
            raise ValueError("truncation must be non-negative")


# slice mixing --------------------------------------------------------------


def _mix(a, I: Quaternion, b, J: Quaternion) -> np.ndarray:
    """``sum_k (a_k)_I (b_k)_J``; ``a`` has shape (K,), ``b`` (K, ...) -> (..., 4)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    rr = np.tensordot(a.real, b.real, axes=(0, 0))
    ri = np.tensordot(a.real, b.imag, axes=(0, 0))
    ir = np.tensordot(a.imag, b.real, axes=(0, 0))
    ii = np.tensordot(a.imag, b.imag, axes=(0, 0))
    Ia, Ja, IJa = I.to_array(), J.to_array(), (I * J).to_array()
    out = (
        np.multiply.outer(rr, np.array([1.0, 0.0, 0.0, 0.0]))
        + np.multiply.outer(ri, Ja)
        + np.multiply.outer(ir, Ia)
        + np.multiply.outer(ii, IJa)
    )
    return out


def _mix1(a, I, b, J) -> Quaternion:
    return from_array(_mix(a, I, b, J))


def _pair(q: QuaternionLike, r: QuaternionLike) -> Tuple[complex, Quaternion, complex, Quaternion]:
    """Complex coordinates of q and r; a real point borrows the other's slice."""
    zq, Iq = to_slice(q)
    zr, Ir = to_slice(r, default_unit=Iq)
    if Quaternion.coerce(q).to_float().is_real():
        Iq = Ir
    return zq, Iq, zr, Ir


def _powers(z: complex, K: int, divisors=None) -> np.ndarray:
    out = np.empty(K + 1, dtype=complex)
    v = 1.0 + 0j
    out[0] = v
    for k in range(1, K + 1):
        v = v * z
        if divisors is not None:
            v = v / divisors[k]
        out[k] = v
    return out


def _sqrt_divisors(K: int) -> np.ndarray:
    d = np.ones(K + 1)
    d[1:] = np.sqrt(np.arange(1, K + 1))
    return d


def series_tail(coef: Callable[[int], float], t: float, N: int, max_terms: int = 100_000) -> float:
    """``sum_{k>N} coef(k) t^k`` summed until terms are negligible (t >= 0)."""
    if t == 0:
        return 0.0
    tail = 0.0
    logt = math.log(t)
    for k in range(N + 1, N + 1 + max_terms):
        c = coef(k)
        if c == 0:
            continue
        term = math.exp(math.log(c) + k * logt) if c > 0 else 0.0
        tail += term
        if k > N + 5 and term <= 1e-18 * max(tail, 1e-300) and coef(k + 1) * t / c < 1:
            return tail
    return math.inf


# Fock and Fock-Fueter -------------------------------------------------------


def fock_kernel(p: QuaternionLike, q: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> Quaternion:
    """``K_H(p, q) = sum p^k conj(q)^k / k!`` truncated at N."""
    zp, Ip, zq, Iq = _pair(p, q)
    d = _sqrt_divisors(N)
    return _mix1(_powers(zp, N, d), Ip, _powers(np.conj(zq), N, d), Iq)


def fock_tail(p: QuaternionLike, q: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> float:
    return exp_tail_bound(abs(Quaternion.coerce(p).to_float()) * abs(Quaternion.coerce(q).to_float()), N)


def fock_fueter_array(q: QuaternionLike, zp, J: Quaternion, N: int = DEFAULT_TRUNCATION) -> np.ndarray:
    """``K_F(q, p)`` at many complex coordinates ``zp`` of the slice of J -> (..., 4)."""
    zq, Iq = to_slice(q, default_unit=J)
    if Quaternion.coerce(q).to_float().is_real():
        Iq = J
    d = _sqrt_divisors(N)
    a = -2.0 * appell_values(zq, N, step_divisors=d)
    zp = np.asarray(zp, dtype=complex)
    zb = np.conj(zp)
    b = np.empty((N + 1,) + zp.shape, dtype=complex)
    v = zb * zb
    b[0] = v
    for k in range(1, N + 1):
        v = v * zb / d[k]
        b[k] = v
    return _mix(a, Iq, b, J)


def fock_fueter_kernel(q: QuaternionLike, p: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> Quaternion:
    """``K_F(q, p) = -2 sum_k Q_k(q)/k! conj(p)^(k+2)``."""
    zp, J = to_slice(p, default_unit=to_slice(q)[1])
    return from_array(fock_fueter_array(q, zp, J, N))


def fock_fueter_tail(q: QuaternionLike, p: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> float:
    """Tail bound from ``|Q_k(q)| <= |q|^k``."""
    a = abs(Quaternion.coerce(q).to_float())
    b = abs(Quaternion.coerce(p).to_float())
    return 2.0 * b * b * exp_tail_bound(a * b, N)


# slice Bergman kernels ------------------------------------------------------


def in_ball(q: QuaternionLike) -> bool:
    return Quaternion.coerce(q).to_float().norm2() < 1.0


def in_halfspace(q: QuaternionLike) -> bool:
    return float(Quaternion.coerce(q).w) > 0.0


def in_halfball(q: QuaternionLike) -> bool:
    return in_ball(q) and in_halfspace(q)


def in_wedge(q: QuaternionLike, n: int) -> bool:
    """Membership in the axially symmetric completion of the planar wedge."""
    z, _ = to_slice(q)
    alpha = complex(math.cos(math.pi / n), math.sin(math.pi / n))
    for w in (z, z.conjugate()):
        if w.real > 0 and (alpha * w).real < 0:
            return True
    return False


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _R(zq: complex, zr: complex) -> complex:
    """``R(q, r) = (1 - 2 Re(q) rbar + |q|^2 rbar^2)^(-1)`` (slice of r)."""
    rb = zr.conjugate()
    return 1.0 / (1.0 - 2.0 * zq.real * rb + abs(zq) ** 2 * rb * rb)


def _P(zq: complex, zr: complex) -> complex:
    """``P(q, r) = (|q|^2 + 2 Re(q) rbar + rbar^2)^(-1)`` (slice of r)."""
    rb = zr.conjugate()
    return 1.0 / (abs(zq) ** 2 + 2.0 * zq.real * rb + rb * rb)


def bergman_ball(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION, form: str = "closed") -> Quaternion:
    """Slice Bergman kernel of the unit ball.

    series: ``sum (k+1) q^k rbar^k``; closed: ``(1 - 2 qbar rbar + qbar^2 rbar^2) R^2``.
    """
    zq, Iq, zr, Ir = _pair(q, r)
    if form == "series":
        _require(abs(zq) * abs(zr) < 1.0, "series needs |q r| < 1")
        a = np.arange(1, N + 2) * _powers(zq, N)
        return _mix1(a, Iq, _powers(zr.conjugate(), N), Ir)
    _require(in_ball(q) and in_ball(r), "ball kernel needs |q|, |r| < 1")
    R = _R(zq, zr)
    qb, rb = zq.conjugate(), zr.conjugate()
    return _mix1([1.0, -2.0 * qb, qb * qb], Iq, [R * R, rb * R * R, rb * rb * R * R], Ir)


def bergman_ball_tail(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> float:
    t = abs(Quaternion.coerce(q).to_float()) * abs(Quaternion.coerce(r).to_float())
    return series_tail(lambda k: k + 1.0, t, N)


def _halfspace_factor(measure: str) -> float:
    if measure == "lebesgue":
        return 1.0 / math.pi
    if measure == "normalized":
        return 1.0
    raise ValueError("measure must be 'lebesgue' or 'normalized'")


def bergman_halfspace(q: QuaternionLike, r: QuaternionLike, measure: str = "lebesgue") -> Quaternion:
    """``c (qbar^2 + 2 qbar rbar + rbar^2) P^2`` with ``c = 1/pi`` (lebesgue) or 1."""
    _require(in_halfspace(q) and in_halfspace(r), "half-space kernel needs Re q, Re r > 0")
    c = _halfspace_factor(measure)
    zq, Iq, zr, Ir = _pair(q, r)
    P = _P(zq, zr)
    qb, rb = zq.conjugate(), zr.conjugate()
    P2 = c * P * P
    return _mix1([qb * qb, 2.0 * qb, 1.0], Iq, [P2, rb * P2, rb * rb * P2], Ir)


def halfdisk_complex_kernel(z: complex, w: complex) -> complex:
    """Planar half-disk kernel ``(1+z^2)(1+wbar^2) / ((1 - z wbar)(z + wbar))^2``."""
    wb = w.conjugate()
    return (1 + z * z) * (1 + wb * wb) / ((1 - z * wb) * (z + wb)) ** 2


def bergman_halfball(q: QuaternionLike, r: QuaternionLike, form: str = "sum", measure: str = "normalized") -> Quaternion:
    """Half-ball kernel: ball kernel plus half-space kernel.

    The default adds the normalised half-space kernel, which is the kernel of
    the half ball for ``dA/pi``.  ``measure="lebesgue"`` adds the ``1/pi``
    variant instead (a mixed normalisation, kept for comparison).
    ``form="extension"`` extends the planar half-disk kernel from the slice
    of r with the representation formula.
    """
    _require(in_halfball(q) and in_halfball(r), "half-ball kernel needs |q| < 1 and Re q > 0")
    if form == "sum":
        return bergman_ball(q, r) + bergman_halfspace(q, r, measure=measure)
    if form == "extension":
        zr, J = to_slice(r, default_unit=to_slice(q)[1])
        return slice_holomorphic_eval(lambda z: halfdisk_complex_kernel(z, zr), q, J)
    raise ValueError("form must be 'sum' or 'extension'")


def wedge_sign(n: int) -> int:
    """Sign making the wedge kernel positive on the diagonal: ``(-1)^(n+1)``."""
    return -1 if n % 2 == 0 else 1


def wedge_complex_kernel(z: complex, w: complex, n: int) -> complex:
    """Planar kernel of the sector of aperture pi/n (normalised measure)."""
    wb = w.conjugate()
    s = (-1) ** n
    return wedge_sign(n) * n * n * z ** (n - 1) * wb ** (n - 1) / (z**n - s * wb**n) ** 2


def bergman_wedge(q: QuaternionLike, r: QuaternionLike, n: int, form: str = "closed") -> Quaternion:
    """Slice Bergman kernel of the axially symmetric wedge of order n.

    closed: ``sgn n^2 q^(n-1) (qbar^2n - 2(-1)^n qbar^n rbar^n + rbar^2n) rbar^(n-1) D^-2``
    with ``D = |q|^2n - 2(-1)^n Re(q^n) rbar^n + rbar^2n``.
    """
    if n < 1:
        raise ValueError("wedge order must be >= 1")
    _require(in_wedge(q, n) and in_wedge(r, n), f"points must lie in the order-{n} wedge")
    zq, Iq, zr, Ir = _pair(q, r)
    if form not in ("closed", "extension"):
        raise ValueError("form must be 'closed' or 'extension'")
    s = (-1) ** n
    rb = zr.conjugate()
    # D vanishes when the sphere of q meets a pole; for even n that includes q = r
    D = abs(zq) ** (2 * n) - 2 * s * (zq**n).real * rb**n + rb ** (2 * n)
    _require(abs(D) > 1e-12 * max(abs(zq), abs(zr)) ** (2 * n), f"order-{n} wedge kernel is singular at this pair")
    if form == "extension":
        return slice_holomorphic_eval(lambda z: wedge_complex_kernel(z, zr, n), q, Ir)
    tail = rb ** (n - 1) / (D * D) * (wedge_sign(n) * n * n)
    zqn1 = zq ** (n - 1)
    qb = zq.conjugate()
    a = [zqn1 * qb ** (2 * n), -2.0 * s * zqn1 * qb**n, zqn1]
    b = [tail, rb**n * tail, rb ** (2 * n) * tail]
    return _mix1(a, Iq, b, Ir)


# Bergman-Fueter kernels -----------------------------------------------------


def bergman_fueter_ball(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION, form: str = "closed") -> Quaternion:
    """series: ``-2 sum (k+1)(k+2)(k+3) Q_k(q) rbar^(k+2)``; closed: ``-4 [R + 2 K_B] R rbar^2``."""
    _require(in_ball(q) and in_ball(r), "ball kernel needs |q|, |r| < 1")
    zq, Iq, zr, Ir = _pair(q, r)
    rb = zr.conjugate()
    if form == "series":
        k = np.arange(N + 1)
        a = -2.0 * (k + 1) * (k + 2) * (k + 3) * appell_values(zq, N)
        return _mix1(a, Iq, _powers(rb, N) * rb * rb, Ir)
    R = _R(zq, zr)
    K = bergman_ball(q, r)
    head = Quaternion.from_complex(R, Ir) + K * 2.0
    return head * Quaternion.from_complex(-4.0 * R * rb * rb, Ir)


def bergman_fueter_ball_array(q: QuaternionLike, zr, J: Quaternion) -> np.ndarray:
    """Closed form at many complex coordinates ``zr`` of the slice of J -> (..., 4)."""
    zq, Iq = to_slice(q, default_unit=J)
    if Quaternion.coerce(q).to_float().is_real():
        Iq = J
    zr = np.asarray(zr, dtype=complex)
    rb = np.conj(zr)
    R = 1.0 / (1.0 - 2.0 * zq.real * rb + abs(zq) ** 2 * rb * rb)
    qb = zq.conjugate()
    K = _mix([1.0, -2.0 * qb, qb * qb], Iq, np.stack([R * R, rb * R * R, rb * rb * R * R]), J)
    head = embed(R, J) + 2.0 * K
    return qmul(head, embed(-4.0 * R * rb * rb, J))


def bergman_fueter_ball_tail(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> float:
    a = abs(Quaternion.coerce(q).to_float())
    b = abs(Quaternion.coerce(r).to_float())
    return 2.0 * b * b * series_tail(lambda k: (k + 1.0) * (k + 2) * (k + 3), a * b, N)


def bergman_fueter_halfspace(q: QuaternionLike, r: QuaternionLike, measure: str = "lebesgue") -> Quaternion:
    """``-4 c [P + 2 K] P`` with K the normalised half-space kernel, c as in the slice kernel."""
    _require(in_halfspace(q) and in_halfspace(r), "half-space kernel needs Re q, Re r > 0")
    c = _halfspace_factor(measure)
    zq, Iq, zr, Ir = _pair(q, r)
    P = _P(zq, zr)
    K = bergman_halfspace(q, r, measure="normalized")
    head = Quaternion.from_complex(P, Ir) + K * 2.0
    return head * Quaternion.from_complex(-4.0 * c * P, Ir)


def bergman_fueter_halfball(q: QuaternionLike, r: QuaternionLike) -> Quaternion:
    _require(in_halfball(q) and in_halfball(r), "half-ball kernel needs |q| < 1 and Re q > 0")
    return bergman_fueter_ball(q, r) + bergman_fueter_halfspace(q, r, measure="normalized")


# RKHS kernels ---------------------------------------------------------------


def _t_scaled_values(z: complex, N: int) -> np.ndarray:
    """``T_k(z) = sqrt((k+1)(k+2)/k!) Q_k(z)`` for k <= N."""
    k = np.arange(N + 1)
    return np.sqrt((k + 1.0) * (k + 2.0)) * appell_values(z, N, step_divisors=_sqrt_divisors(N))


def rkhs_G(p: QuaternionLike, q: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> Quaternion:
    """``G(p, q) = sum T_k(p) conj(T_k(q))``."""
    zp, Ip, zq, Iq = _pair(p, q)
    return _mix1(_t_scaled_values(zp, N), Ip, np.conj(_t_scaled_values(zq, N)), Iq)


def rkhs_G_tail(p: QuaternionLike, q: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> float:
    t = abs(Quaternion.coerce(p).to_float()) * abs(Quaternion.coerce(q).to_float())
    return series_tail(lambda k: math.exp(math.log((k + 1) * (k + 2)) - math.lgamma(k + 1)), t, N)


def _L_weight(k) -> float:
    return (k + 1.0) ** 2 * (k + 2.0) ** 2 * (k + 3.0)


def rkhs_L(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> Quaternion:
    """``L(q, r) = sum (k+1)^2 (k+2)^2 (k+3) Q_k(q) Q_k(rbar)``."""
    zq, Iq, zr, Ir = _pair(q, r)
    _require(abs(zq) * abs(zr) < 1.0, "L needs |q r| < 1")
    k = np.arange(N + 1)
    a = _L_weight(k) * appell_values(zq, N)
    return _mix1(a, Iq, appell_values(zr.conjugate(), N), Ir)


def rkhs_L_tail(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> float:
    t = abs(Quaternion.coerce(q).to_float()) * abs(Quaternion.coerce(r).to_float())
    return series_tail(_L_weight, t, N)


# generating functions --------------------------------------------------------


def generating_series(q: QuaternionLike, r: QuaternionLike, N: int = DEFAULT_TRUNCATION) -> Quaternion:
    """``sum_{k<=N} (k+1)(k+2)(k+3) Q_k(q) rbar^k``."""
    zq, Iq, zr, Ir = _pair(q, r)
    k = np.arange(N + 1)
    a = (k + 1.0) * (k + 2) * (k + 3) * appell_values(zq, N)
    return _mix1(a, Iq, _powers(zr.conjugate(), N), Ir)


def generating_closed(q: QuaternionLike, r: QuaternionLike) -> Quaternion:
    """``2 R^2 + 4 K_B R``."""
    zq, Iq, zr, Ir = _pair(q, r)
    R = _R(zq, zr)
    return Quaternion.from_complex(2.0 * R * R, Ir) + bergman_ball(q, r) * Quaternion.from_complex(4.0 * R, Ir)


# dispatch for the command line ------------------------------------------------


def evaluate(spec: KernelSpec, q: QuaternionLike, p: QuaternionLike) -> Tuple[Quaternion, float]:
    """Evaluate a kernel by spec; returns the value and a truncation error bound."""
    N, name = spec.truncation, spec.name
    series = spec.form == "series"
    if name == "fock":
        return fock_kernel(q, p, N), fock_tail(q, p, N)
    if name == "fock_fueter":
        return fock_fueter_kernel(q, p, N), fock_fueter_tail(q, p, N)
    if name == "bergman_ball":
        if series:
            return bergman_ball(q, p, N, "series"), bergman_ball_tail(q, p, N)
        return bergman_ball(q, p), 0.0
    if name == "bergman_halfspace":
        return bergman_halfspace(q, p), 0.0
    if name == "bergman_halfball":
        return bergman_halfball(q, p), 0.0
    if name == "bergman_wedge":
        return bergman_wedge(q, p, spec.wedge_n), 0.0
    if name == "bergman_fueter_ball":
        if series:
            return bergman_fueter_ball(q, p, N, "series"), bergman_fueter_ball_tail(q, p, N)
        return bergman_fueter_ball(q, p), 0.0
    if name == "bergman_fueter_halfspace":
        return bergman_fueter_halfspace(q, p), 0.0
    if name == "bergman_fueter_halfball":
        return bergman_fueter_halfball(q, p), 0.0
    if name == "rkhs_G":
        return rkhs_G(q, p, N), rkhs_G_tail(q, p, N)
    if name == "rkhs_L":
        return rkhs_L(q, p, N), rkhs_L_tail(q, p, N)
    raise ValueError(name)
