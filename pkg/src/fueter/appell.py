"""Appell family of Fueter-regular polynomials.

``Q_k(q) = sum_j T^k_j q^(k-j) qbar^j`` with ``T^k_j = 2(k-j+1)/((k+1)(k+2))``;
``P_k = -2 Q_k / k!`` and ``T_k = sqrt((k+1)(k+2)/k!) Q_k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from .operators import fueter_monomial
from .quaternion import Quaternion, QuaternionLike, to_slice
from .series import QQbarPoly

DEFAULT_MAX_DEGREE = 64


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = Fraction(1) if isinstance(a, (int, Fraction)) else 1.0
    for i in range(n):
        out *= a + i
    return out


def appell_coefficient(k: int, j: int) -> Fraction:
    """``T^k_j = 2(k-j+1)/((k+1)(k+2))``."""
    if not 0 <= j <= k:
        raise ValueError("need 0 <= j <= k")
    return Fraction(2 * (k - j + 1), (k + 1) * (k + 2))


def appell_coefficient_pochhammer(k: int, j: int) -> Fraction:
    """Same coefficient written as ``k!/(3)_k * (2)_{k-j} (1)_j / ((k-j)! j!)``."""
    if not 0 <= j <= k:
        raise ValueError("need 0 <= j <= k")
    return (
        Fraction(math.factorial(k)) / pochhammer(3, k)
        * pochhammer(2, k - j) * pochhammer(1, j)
        / (math.factorial(k - j) * math.factorial(j))
    )


@lru_cache(maxsize=None)
def appell_Q(k: int) -> QQbarPoly:
    if k < 0:
        raise ValueError("k must be non-negative")
    return QQbarPoly({(k - j, j): appell_coefficient(k, j) for j in range(k + 1)})


def appell_Q_via_fueter(k: int) -> QQbarPoly:
    """``-f~_{k+2} / (2(k+1)(k+2))`` built from the Fueter image of ``q^(k+2)``."""
    return fueter_monomial(k + 2) * Fraction(-1, 2 * (k + 1) * (k + 2))


def appell_P(k: int) -> QQbarPoly:
    """``f~_{k+2}/(k+2)! = -2 Q_k / k!``."""
    return appell_Q(k) * Fraction(-2, math.factorial(k))


def t_normalizer(k: int) -> float:
    """``sqrt((k+1)(k+2)/k!)`` computed without overflow."""
    return math.exp(0.5 * (math.log((k + 1) * (k + 2)) - math.lgamma(k + 1)))


def appell_T(k: int) -> QQbarPoly:
    return appell_Q(k) * t_normalizer(k)


@dataclass
class AppellCache:
    """Tables of Q_k, P_k, T_k and the scalars T^k_j up to ``max_degree``."""

    max_degree: int = DEFAULT_MAX_DEGREE
    Q: List[QQbarPoly] = field(init=False)
    P: List[QQbarPoly] = field(init=False)
    T: List[QQbarPoly] = field(init=False)
    coefficients: Dict[Tuple[int, int], Fraction] = field(init=False)
    normalizers: List[float] = field(init=False)

    def __post_init__(self):
        self.Q = [appell_Q(k) for k in range(self.max_degree + 1)]
        self.P = [appell_P(k) for k in range(self.max_degree + 1)]
        self.T = [appell_T(k) for k in range(self.max_degree + 1)]
        self.coefficients = {
            (k, j): appell_coefficient(k, j)
            for k in range(self.max_degree + 1)
            for j in range(k + 1)
        }
        self.normalizers = [t_normalizer(k) for k in range(self.max_degree + 1)]


def appell_values(z, K: int, factorial_scaled: bool = False, step_divisors=None) -> np.ndarray:
    """``Q_0(z) .. Q_K(z)`` for complex ``z`` (scalar or array) via a recurrence.

    With ``S_k = sum_m (m+1) z^m zbar^(k-m)`` and ``E_k = sum_m z^m zbar^(k-m)``:
    ``E_k = z E_{k-1} + zbar^k``, ``S_k = z S_{k-1} + E_k``,
    ``Q_k = 2 S_k / ((k+1)(k+2))``.  ``step_divisors`` ``d`` returns
    ``Q_k / (d_1 ... d_k)`` with the division folded into the recurrence so
    large ``K`` cannot overflow; ``factorial_scaled`` is ``d_k = k``.
    Output shape: ``(K+1,) + shape(z)``.
    """
    if factorial_scaled:
        step_divisors = np.arange(K + 1, dtype=float)
    z = np.asarray(z, dtype=complex)
    zb = np.conj(z)
    out = np.empty((K + 1,) + z.shape, dtype=complex)
    E = np.ones_like(z)
    S = np.ones_like(z)
    V = np.ones_like(z)  # scaled zbar^k
    out[0] = 1.0
    for k in range(1, K + 1):
        d = 1.0 if step_divisors is None else float(step_divisors[k])
        V = V * zb / d
        E = z * E / d + V
        S = z * S / d + E
        out[k] = 2.0 * S / ((k + 1) * (k + 2))
    return out


def appell_eval(k: int, q: QuaternionLike) -> Quaternion:
    """Float value of ``Q_k(q)``."""
    z, unit = to_slice(q)
    return Quaternion.from_complex(complex(appell_values(z, k)[k]), unit)


def exp_tail_bound(r: float, N: int) -> float:
    """``sum_{k>N} r^k / k!`` (bound on the regular exponential's tail)."""
    if r == 0:
        return 0.0
    term = math.exp(N * math.log(r) - math.lgamma(N + 1)) if r > 0 else 0.0
    tail = 0.0
    k = N
    while True:
        k += 1
        term *= r / k
        tail += term
        if term < 1e-300 or (k > r and term < 1e-18 * max(tail, 1e-300)):
            break
    return tail


def regular_exp(s: QuaternionLike, N: int = 300) -> Tuple[Quaternion, float]:
    """``Exp(s) = sum_{k<=N} Q_k(s)/k!`` and the tail bound ``sum_{k>N} |s|^k/k!``."""
    z, unit = to_slice(s)
    vals = appell_values(z, N, factorial_scaled=True)
    value = Quaternion.from_complex(complex(np.sum(vals)), unit)
    return value, exp_tail_bound(abs(Quaternion.coerce(s).to_float()), N)
