"""Hermite functions, Segal-Bargmann and Fock-Fueter transforms, coefficient spaces.

Hermite convention: physicists' ``H_n`` with ``h_n = H_n exp(-x^2/2)``,
``||h_n||^2 = 2^n n! sqrt(pi)`` and ``xi_n = h_n / ||h_n||``.  With it the
Bargmann-Fock-Fueter kernel is ``Phi(q, x) = -2 sum_k T_k(q) xi_{k+2}(x)``.

Coefficient conventions: Appell series ``sum Q_k(q) alpha_k`` and slice
series ``sum q^k c_k`` carry coefficients on the right; every inner product
is ``sum_k w_k conj(beta_k) alpha_k`` (conjugate on the second argument).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .appell import appell_values, t_normalizer
from .kernels import DEFAULT_TRUNCATION, _t_scaled_values, bergman_fueter_ball_array, fock_fueter_array, series_tail
from .operators import fueter_series_inverse
from .quadrature import (
    QuadratureError,
    QuadratureRule,
    check_estimate,
    disk_rule,
    gauss_hermite,
    r4_gauss,
    slice_gauss,
)
from .quaternion import QI, Quaternion, QuaternionLike, embed, from_array, qconj, qmul, to_slice
from .series import QQbarPoly, RegularSeries, SliceSeries

DEFAULT_QUAD_ORDER = 80
PI_QUARTER = math.pi ** -0.25
# Cramer: |h_n(x)| <= CRAMER * 2^(n/2) sqrt(n!) ; equivalently |xi_n| <= CRAMER pi^(-1/4)
CRAMER = 1.086435


class QuadResult(NamedTuple):
    value: Quaternion
    error: float


def _zero() -> Quaternion:
    return Quaternion(0.0, 0.0, 0.0, 0.0)


# Hermite functions -----------------------------------------------------------


@dataclass(frozen=True)
class HermiteBasis:
    """Physicists' Hermite polynomials and functions up to ``max_index``."""

    max_index: int

    def __post_init__(self):
        if self.max_index < 0:
            raise ValueError("max_index must be non-negative")

    def H(self, x) -> np.ndarray:
        """``H_0(x) .. H_n(x)``, shape ``(n+1,) + shape(x)``."""
        x = np.asarray(x, dtype=float)
        out = np.empty((self.max_index + 1,) + x.shape)
        out[0] = 1.0
        if self.max_index >= 1:
            out[1] = 2.0 * x
        for n in range(1, self.max_index):
            out[n + 1] = 2.0 * x * out[n] - 2.0 * n * out[n - 1]
        return out

    def h(self, x) -> np.ndarray:
        """``h_n(x) = H_n(x) exp(-x^2/2)``, built from the stable normalised recurrence."""
        norms = np.sqrt([self.norm2(n) for n in range(self.max_index + 1)])
        return self.xi(x) * norms.reshape((-1,) + (1,) * np.ndim(x))

    def xi_scaled(self, x) -> np.ndarray:
        """``xi_n(x) exp(x^2/2)`` (a polynomial), for Gauss-Hermite integrands."""
        x = np.asarray(x, dtype=float)
        out = np.empty((self.max_index + 1,) + x.shape)
        out[0] = PI_QUARTER
        if self.max_index >= 1:
            out[1] = math.sqrt(2.0) * x * out[0]
        for n in range(1, self.max_index):
            out[n + 1] = math.sqrt(2.0 / (n + 1)) * x * out[n] - math.sqrt(n / (n + 1)) * out[n - 1]
        return out

    def xi(self, x) -> np.ndarray:
        """Orthonormal Hermite functions ``xi_n = h_n / ||h_n||``."""
        x = np.asarray(x, dtype=float)
        return self.xi_scaled(x) * np.exp(-0.5 * x * x)

    @staticmethod
    def norm2(n: int) -> float:
        """``||h_n||^2 = 2^n n! sqrt(pi)``."""
        return math.exp(n * math.log(2.0) + math.lgamma(n + 1)) * math.sqrt(math.pi)


def _coeffs(seq) -> list:
    if isinstance(seq, (SliceSeries, RegularSeries)):
        return list(seq.coeffs)
    return [Quaternion.coerce(c) for c in seq]


def _coeff_array(coeffs) -> np.ndarray:
    return np.array([c.to_array() for c in coeffs]).reshape(-1, 4)


# Segal-Bargmann ------------------------------------------------------------------


def segal_bargmann_series(phi: Sequence[QuaternionLike]) -> SliceSeries:
    """Coefficient route: ``xi_n -> q^n / sqrt(n!)``."""
    return SliceSeries(tuple(c.to_float() * math.exp(-0.5 * math.lgamma(n + 1)) for n, c in enumerate(_coeffs(phi))))


def _sample(phi, x: np.ndarray) -> np.ndarray:
    """Values of a callable at real nodes as ``(n, 4)``."""
    try:
        vals = np.asarray(phi(x))
        if vals.shape == x.shape and not np.iscomplexobj(vals):
            out = np.zeros(x.shape + (4,))
            out[:, 0] = vals
            return out
        if vals.shape == x.shape + (4,):
            return vals.astype(float)
    except (TypeError, ValueError):
        pass
    return np.array([Quaternion.coerce(phi(float(t))).to_float().to_array() for t in x])


def _segal_bargmann_once(phi, q: QuaternionLike, n: int) -> Quaternion:
    z, I = to_slice(q)
    rule = gauss_hermite(n)
    x = rule.nodes
    # A(q,x) exp(x^2) with the exp(-x^2/2) of xi_n (or of phi) folded in below
    base = PI_QUARTER * np.exp(-0.5 * z * z + math.sqrt(2.0) * z * x)
    if callable(phi):
        vals = _sample(phi, x) * np.exp(0.5 * x * x)[:, None]
    else:
        coeffs = _coeffs(phi)
        if not coeffs:
            return _zero()
        xs = HermiteBasis(len(coeffs) - 1).xi_scaled(x)  # (N, n)
        vals = xs.T @ _coeff_array(coeffs)  # (n, 4)
    return from_array(rule.integrate(qmul(embed(base, I), vals)))


def segal_bargmann(phi, q: QuaternionLike, order: int = DEFAULT_QUAD_ORDER, tol: Optional[float] = None,
                   with_error: bool = False):
    """``B(phi)(q) = int A(q,x) phi(x) dx`` by Gauss-Hermite quadrature.

    ``phi`` is either a sequence of xi-coefficients (right coefficients) or a
    callable on the real line.  The error estimate compares orders ``n`` and
    ``n//2``; a ``tol`` below it raises QuadratureError.
    """
    value = _segal_bargmann_once(phi, q, order)
    err = check_estimate(value.to_array(), _segal_bargmann_once(phi, q, max(order // 2, 1)).to_array(), tol,
                         "Segal-Bargmann transform")
    return QuadResult(value, err) if with_error else value


# values of series at quadrature nodes ------------------------------------------


def slice_values(f: Union[SliceSeries, QQbarPoly], z, I: Quaternion) -> np.ndarray:
    """Values of a slice series (or q, qbar polynomial) at complex nodes of one slice -> (n, 4)."""
    z = np.asarray(z, dtype=complex)
    if isinstance(f, QQbarPoly):
        return embed(f.eval_complex(z), I)
    coeffs = _coeffs(f)
    out = np.zeros(z.shape + (4,))
    zk = np.ones_like(z)
    for c in coeffs:
        out += qmul(embed(zk, I), c.to_array())
        zk = zk * z
    return out


def _axial(points: np.ndarray):
    """Complex coordinates and units of many quaternions (real points go to i)."""
    points = np.asarray(points, dtype=float)
    v = np.linalg.norm(points[:, 1:], axis=1)
    safe = np.where(v > 0, v, 1.0)
    units = np.where(v[:, None] > 0, points[:, 1:] / safe[:, None], np.array([1.0, 0.0, 0.0]))
    return points[:, 0] + 1j * v, units


def _embed_units(c: np.ndarray, units: np.ndarray) -> np.ndarray:
    return np.concatenate([c.real[..., None], c.imag[..., None] * units], axis=-1)


def point_values(f, points: np.ndarray) -> np.ndarray:
    """Values of a RegularSeries / SliceSeries / QQbarPoly / callable at ``(n, 4)`` points."""
    points = np.asarray(points, dtype=float)
    if isinstance(f, (RegularSeries, QQbarPoly, SliceSeries)):
        z, units = _axial(points)
        if isinstance(f, QQbarPoly):
            return _embed_units(f.eval_complex(z), units)
        coeffs = _coeffs(f)
        if not coeffs:
            return np.zeros((len(points), 4))
        if isinstance(f, RegularSeries):
            basis = appell_values(z, len(coeffs) - 1)
        else:
            basis = z[None, :] ** np.arange(len(coeffs))[:, None]
        out = np.zeros((len(points), 4))
        for b, c in zip(basis, coeffs):
            out += qmul(_embed_units(b, units), c.to_array())
        return out
    return np.array([Quaternion.coerce(f(from_array(p))).to_float().to_array() for p in points])


# spaces -------------------------------------------------------------------------


class SpaceTag(enum.Enum):
    """Coefficient spaces with their weight sequences ``w_k``."""

    fock_slice = "fock_slice"      # slice Fock space, basis q^k
    A_H = "A_H"                    # Fock-Fueter space, basis Q_k
    B_B = "B_B"                    # Bergman-Fueter space of the ball, basis Q_k
    RB_H = "RB_H"                  # Gaussian L^2 on R^4 restricted to span{Q_k}
    L2_R = "L2_R"                  # L^2(R), basis xi_n
    H_sub = "H_sub"                # closed span of xi_n, n >= 2
    bergman_slice = "bergman_slice"  # slice Bergman space of the ball, basis q^k

    def weight(self, k: int) -> Fraction:
        if self is SpaceTag.fock_slice:
            return Fraction(math.factorial(k))
        if self is SpaceTag.A_H:
            return Fraction(math.factorial(k), (k + 1) * (k + 2))
        if self is SpaceTag.B_B:
            return Fraction(1, (k + 1) ** 2 * (k + 2) ** 2 * (k + 3))
        if self is SpaceTag.RB_H:
            return Fraction(2 * math.factorial(k), k + 2)
        if self is SpaceTag.L2_R:
            return Fraction(1)
        if self is SpaceTag.H_sub:
            return Fraction(0) if k < 2 else Fraction(1)
        if self is SpaceTag.bergman_slice:
            return Fraction(1, k + 1)
        raise AssertionError(self)


def _space(space) -> SpaceTag:
    return space if isinstance(space, SpaceTag) else SpaceTag(space)


def coefficient_inner_product(f, g, space, basis: str = "Q") -> Quaternion:
    """``<f, g> = sum_k w_k conj(beta_k) alpha_k`` with f <-> alpha, g <-> beta.

    Shorter sequences are padded with zeros.  ``basis="T"`` (A_H only) reads
    the coefficients against ``T_k``, where every weight is 1.
    """
    space = _space(space)
    a, b = _coeffs(f), _coeffs(g)
    n = max(len(a), len(b))
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    a += [zero] * (n - len(a))
    b += [zero] * (n - len(b))
    if basis == "T":
        if space is not SpaceTag.A_H:
            raise ValueError("the T basis belongs to A_H")
        weights = [Fraction(1)] * n
    elif basis == "Q":
        weights = [space.weight(k) for k in range(n)]
    else:
        raise ValueError("basis must be 'Q' or 'T'")
    out = zero
    for w, x, y in zip(weights, a, b):
        if w:
            term = y.conj() * x
            out = out + (term * w if term.is_exact else term * float(w))
    return out


def coefficient_norm2(f, space, basis: str = "Q"):
    return coefficient_inner_product(f, f, space, basis).w


@dataclass(frozen=True)
class Membership:
    in_space: bool
    norm2: object
    preimage: Optional[SliceSeries] = None


def membership_check(coeffs, space) -> Membership:
    """Weighted norm of a finite sequence; Appell spaces also get the slice preimage.

    The preimage uses ``c_{k+2} = -alpha_k / (2(k+1)(k+2))``, inverse of
    ``alpha_k = -2(k+1)(k+2) c_{k+2}``.
    """
    space = _space(space)
    seq = _coeffs(coeffs)
    n2 = coefficient_norm2(seq, space)
    pre = None
    if space in (SpaceTag.A_H, SpaceTag.B_B, SpaceTag.RB_H):
        pre = fueter_series_inverse(RegularSeries(tuple(seq)))
    finite = math.isfinite(float(n2))
    if space is SpaceTag.H_sub:
        finite = finite and all(c == 0 for c in seq[:2])
    return Membership(finite, n2, pre)


def rkhs_G_coefficients(q: QuaternionLike, K: int) -> RegularSeries:
    """``G_q`` in the Q basis: ``alpha_k = ((k+1)(k+2)/k!) conj(Q_k(q))``."""
    z, I = to_slice(q)
    vals = appell_values(z, K)
    return RegularSeries(tuple(
        Quaternion.from_complex(np.conj(v) * math.exp(math.log((k + 1) * (k + 2)) - math.lgamma(k + 1)), I)
        for k, v in enumerate(vals)
    ))


def rkhs_L_coefficients(p: QuaternionLike, K: int) -> RegularSeries:
    """``L_p`` in the Q basis: ``beta_k = (k+1)^2 (k+2)^2 (k+3) conj(Q_k(p))``."""
    z, I = to_slice(p)
    vals = appell_values(z, K)
    return RegularSeries(tuple(
        Quaternion.from_complex(np.conj(v) * ((k + 1) ** 2 * (k + 2) ** 2 * (k + 3)), I)
        for k, v in enumerate(vals)
    ))


# quadrature inner products ------------------------------------------------------


def _default_rule(space: SpaceTag, order: int) -> QuadratureRule:
    if space is SpaceTag.fock_slice:
        return slice_gauss(QI, order)
    if space is SpaceTag.bergman_slice:
        return disk_rule(QI, max(order // 2, 1), order)
    if space is SpaceTag.RB_H:
        return r4_gauss(min(order, 12))
    if space in (SpaceTag.L2_R, SpaceTag.H_sub):
        return gauss_hermite(order)
    raise ValueError(f"no integral definition for {space.value}")


def _rule_values(f, rule: QuadratureRule) -> np.ndarray:
    if rule.domain == "real_line_gauss":
        return _sample(f, rule.nodes) * np.exp(rule.nodes**2)[:, None]
    if rule.domain == "r4_gauss":
        return point_values(f, rule.nodes)
    if isinstance(f, (SliceSeries, QQbarPoly)):
        return slice_values(f, rule.nodes, rule.unit)
    return point_values(f, rule.points)


def quadrature_inner_product(f, g, space, quad: Optional[QuadratureRule] = None,
                             order: int = DEFAULT_QUAD_ORDER) -> Quaternion:
    """``int conj(g) f`` against the space's measure, by quadrature.

    Real-line rules expect callables decaying like the Hermite functions;
    the ``exp(-x^2)`` weight is divided out at the nodes.
    """
    space = _space(space)
    rule = quad if quad is not None else _default_rule(space, order)
    fv = _rule_values(f, rule)
    gv = _rule_values(g, rule)
    if rule.domain == "real_line_gauss":
        # each factor carries exp(x^2); one of them must go
        gv = gv * np.exp(-rule.nodes**2)[:, None]
    return from_array(rule.integrate(qmul(qconj(gv), fv)))


# Fock-Fueter transform ------------------------------------------------------------


def _fock_fueter_once(f: SliceSeries, q, rule: QuadratureRule, N: int) -> Quaternion:
    kern = fock_fueter_array(q, rule.nodes, rule.unit, N)
    return from_array(rule.integrate(qmul(kern, slice_values(f, rule.nodes, rule.unit))))


def fock_fueter_transform(f: SliceSeries, q: QuaternionLike, quad: Optional[QuadratureRule] = None,
                          N: int = DEFAULT_TRUNCATION, tol: Optional[float] = None, with_error: bool = False):
    """``int K_F(q,p) f(p) dmu_I(p)`` over a Gaussian slice rule (default: slice i, order 80)."""
    rule = quad if quad is not None else slice_gauss(QI, DEFAULT_QUAD_ORDER)
    value = _fock_fueter_once(f, q, rule, N)
    half = slice_gauss(rule.unit, max(rule.order // 2, 1))
    err = check_estimate(value.to_array(), _fock_fueter_once(f, q, half, N).to_array(), tol, "Fock-Fueter transform")
    return QuadResult(value, err) if with_error else value


# Bargmann-Fock-Fueter ----------------------------------------------------------------


def phi_kernel(q: QuaternionLike, x, N: int = 60) -> np.ndarray:
    """``Phi(q, x) = -2 sum_{k<=N} T_k(q) xi_{k+2}(x)``; returns ``(4,)`` or ``shape(x) + (4,)``."""
    z, I = to_slice(q)
    t = _t_scaled_values(z, N)
    xi = HermiteBasis(N + 2).xi(np.asarray(x, dtype=float))[2:]
    vals = -2.0 * np.tensordot(t, xi, axes=(0, 0))
    return embed(vals, I)


def phi_tail(q: QuaternionLike, N: int) -> float:
    """Bound on the truncated part using ``|Q_k(q)| <= |q|^k`` and Cramer's inequality."""
    a = abs(Quaternion.coerce(q).to_float())
    return 2.0 * CRAMER * PI_QUARTER * series_tail(lambda k: t_normalizer(k), a, N)


def _phi_quadrature_once(q, x: float, I: Quaternion, n: int, N: int) -> np.ndarray:
    # integrand magnitude ~ exp(-3a^2/2 - b^2/2): stretch the nodes to match
    rule = slice_gauss(I, n, scale=(math.sqrt(2.0 / 3.0), math.sqrt(2.0)))
    p = rule.nodes
    A = PI_QUARTER * np.exp(-0.5 * (p * p + x * x) + math.sqrt(2.0) * p * x)
    kern = fock_fueter_array(q, p, I, N)
    return rule.integrate(qmul(kern, embed(A, I)))


def phi_kernel_quadrature(q: QuaternionLike, x: float, I: Quaternion = QI, order: int = DEFAULT_QUAD_ORDER,
                          N: int = DEFAULT_TRUNCATION, tol: Optional[float] = None, with_error: bool = False):
    """``Phi(q, x) = int K_F(q,p) A(p,x) dmu_I(p)`` by a stretched Gaussian slice rule."""
    value = _phi_quadrature_once(q, x, I, order, N)
    err = check_estimate(value, _phi_quadrature_once(q, x, I, max(order // 2, 1), N), tol, "Phi kernel")
    v = from_array(value)
    return QuadResult(v, err) if with_error else v


def bargmann_fock_fueter_coefficients(phi, basis: str = "T") -> RegularSeries:
    """Image of xi-coefficients ``a_n``: ``sum T_k (-2 a_{k+2})``.

    ``basis="T"`` returns ``-2 a_{k+2}`` (exact for exact input);
    ``basis="Q"`` returns ``-2 t_k a_{k+2}`` with ``t_k = sqrt((k+1)(k+2)/k!)``.
    """
    a = _coeffs(phi)
    out = []
    for k in range(max(len(a) - 2, 0)):
        c = a[k + 2] * (-2)
        if basis == "Q":
            c = c.to_float() * t_normalizer(k)
        elif basis != "T":
            raise ValueError("basis must be 'Q' or 'T'")
        out.append(c)
    return RegularSeries(tuple(out))


def bargmann_fock_fueter(phi, q: QuaternionLike) -> Quaternion:
    """``S(phi)(q)``: 0 for xi_0, xi_1 and ``-2 T_{n-2}(q) a_n`` otherwise."""
    return bargmann_fock_fueter_coefficients(phi, basis="Q")(q)


def bargmann_fock_fueter_quadrature(phi, q: QuaternionLike, order: int = DEFAULT_QUAD_ORDER, N: int = 60) -> Quaternion:
    """``int Phi(q,x) phi(x) dx`` by Gauss-Hermite (series Phi, coefficient phi)."""
    rule = gauss_hermite(order)
    x = rule.nodes
    z, I = to_slice(q)
    a = _coeffs(phi)
    if not a:
        return _zero()
    M = max(N + 2, len(a) - 1)
    xs = HermiteBasis(M).xi_scaled(x)
    t = _t_scaled_values(z, N)
    phi_x = embed(-2.0 * np.tensordot(t, xs[2:N + 3], axes=(0, 0)), I)  # Phi e^{x^2/2}
    f_x = xs[: len(a)].T @ _coeff_array(a)  # phi e^{x^2/2}
    return from_array(rule.integrate(qmul(phi_x, f_x)))


def phi_gram(q: QuaternionLike, p: QuaternionLike, order: int = DEFAULT_QUAD_ORDER, N: int = 60) -> Quaternion:
    """``int Phi(q,x) Phi(p,x) dx`` by Gauss-Hermite."""
    rule = gauss_hermite(order)
    x = rule.nodes
    xs = HermiteBasis(N + 2).xi_scaled(x)[2:]
    vals = []
    for pt in (q, p):
        z, I = to_slice(pt)
        vals.append(embed(-2.0 * np.tensordot(_t_scaled_values(z, N), xs, axes=(0, 0)), I))
    return from_array(rule.integrate(qmul(vals[0], vals[1])))


def phi_gram_series(q: QuaternionLike, p: QuaternionLike, N: int = 60) -> Quaternion:
    """``4 sum_{k<=N} T_k(q) T_k(p)``."""
    from .kernels import _mix1, _pair

    zq, Iq, zp, Ip = _pair(q, p)
    return _mix1(4.0 * _t_scaled_values(zq, N), Iq, _t_scaled_values(zp, N), Ip)


# integral representations -----------------------------------------------------------


def fock_moment(k: int, x: float, order: int = DEFAULT_QUAD_ORDER) -> complex:
    """``int_{C_I} p^k |p|^4 exp(-|p|^2 + x pbar) dA(p)`` by the Gaussian slice rule."""
    rule = slice_gauss(QI, order)
    p = rule.nodes
    vals = p**k * np.abs(p) ** 4 * np.exp(x * np.conj(p))
    return complex(math.pi * np.sum(rule.weights * vals))


def fock_moment_closed(k: int, x: float) -> float:
    return math.pi * (k + 1) * (k + 2) * x**k


def integral_representation_Q(k: int, q: QuaternionLike, source: str = "fock", order: int = DEFAULT_QUAD_ORDER,
                              N: int = DEFAULT_TRUNCATION, I: Quaternion = QI) -> Quaternion:
    """``Q_k(q)`` reconstructed from one of three integral formulas.

    fock:    ``-1/(2(k+1)(k+2)) int K_F(q,p) p^(k+2) dmu_I(p)``
    hermite: ``-1/(4 pi^(1/4) 2^(k/2) (k+1)(k+2)) int Phi(q,x) h_(k+2)(x) dx``
    bergman: ``-1/(2(k+1)(k+2)) int_{B_I} K_BF(q,r) r^(k+2) dsigma_I(r)``
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    c = -1.0 / (2 * (k + 1) * (k + 2))
    if source == "fock":
        rule = slice_gauss(I, order)
        p = rule.nodes
        vals = qmul(fock_fueter_array(q, p, I, N), embed(p ** (k + 2), I))
        return from_array(rule.integrate(vals)) * c
    if source == "hermite":
        rule = gauss_hermite(order)
        x = rule.nodes
        nphi = max(k + 10, 40)
        basis = HermiteBasis(nphi + 2)
        xs = basis.xi_scaled(x)
        z, J = to_slice(q)
        phi_x = embed(-2.0 * np.tensordot(_t_scaled_values(z, nphi), xs[2:], axes=(0, 0)), J)
        h_x = xs[k + 2] * math.sqrt(HermiteBasis.norm2(k + 2))  # h_{k+2} e^{x^2/2}
        integral = from_array(rule.integrate(phi_x * h_x[:, None]))
        return integral * (-1.0 / (4 * PI_QUARTER**-1 * 2 ** (k / 2) * (k + 1) * (k + 2)))
    if source == "bergman":
        rule = disk_rule(I, max(order // 2, 1), order)
        r = rule.nodes
        vals = qmul(bergman_fueter_ball_array(q, r, I), embed(r ** (k + 2), I))
        return from_array(rule.integrate(vals)) * c
    raise ValueError("source must be 'fock', 'hermite' or 'bergman'")


__all__ = [
    "HermiteBasis",
    "Membership",
    "QuadResult",
    "QuadratureError",
    "SpaceTag",
    "bargmann_fock_fueter",
    "bargmann_fock_fueter_coefficients",
    "bargmann_fock_fueter_quadrature",
    "coefficient_inner_product",
    "coefficient_norm2",
    "fock_fueter_transform",
    "fock_moment",
    "fock_moment_closed",
    "integral_representation_Q",
    "membership_check",
    "phi_gram",
    "phi_gram_series",
    "phi_kernel",
    "phi_kernel_quadrature",
    "phi_tail",
    "point_values",
    "quadrature_inner_product",
    "rkhs_G_coefficients",
    "rkhs_L_coefficients",
    "segal_bargmann",
    "segal_bargmann_series",
    "slice_values",
]
