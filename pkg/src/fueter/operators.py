"""Cauchy-Fueter operator, its conjugate, Laplacian, Euler operator, Fueter map.

Exact actions on ``q^a conj(q)^b``: writing a real-coefficient polynomial as
``F(z, conj z)`` on the slice of ``q`` and ``A + I B`` in axial coordinates
``(x0, r)``, one has

    dirac F = 2 dF/dzbar - 2 (F - F~) / (z - zbar)
    dbar  F = 2 dF/dz    + 2 (F - F~) / (z - zbar)

where ``F~`` swaps the roles of ``z`` and ``zbar``.  The divided difference
is again a polynomial, so every coefficient stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict

import numpy as np

from .quaternion import Quaternion, QuaternionLike
from .series import Monomial, QQbarPoly, RegularSeries, SliceSeries

DEFAULT_FD_STEP = 1e-3
_UNITS = np.eye(4)


class CapacityError(ValueError):
    """Polynomial degree exceeds the operator table capacity."""


def _divided_difference(a: int, b: int) -> Dict[Monomial, int]:
    """``(z^a zb^b - z^b zb^a) / (z - zb)`` as integer monomial weights."""
    if a == b:
        return {}
    sign = 1
    if a < b:
        a, b, sign = b, a, -1
    d = a - b
    return {(b + d - 1 - m, b + m): sign for m in range(d)}


def _dirac_monomial_table(a: int, b: int) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    if b:
        out[(a, b - 1)] = 2 * b
    for m, c in _divided_difference(a, b).items():
        out[m] = out.get(m, 0) - 2 * c
    return {m: c for m, c in out.items() if c}


def _dbar_monomial_table(a: int, b: int) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    if a:
        out[(a - 1, b)] = 2 * a
    for m, c in _divided_difference(a, b).items():
        out[m] = out.get(m, 0) + 2 * c
    return {m: c for m, c in out.items() if c}


def _apply(table: Callable[[int, int], Dict[Monomial, int]], p: QQbarPoly) -> QQbarPoly:
    out: Dict[Monomial, object] = {}
    for (a, b), c in p.terms.items():
        for m, w in table(a, b).items():
            out[m] = out.get(m, 0) + c * w
    return QQbarPoly(out)


class OperatorTable:
    """Exact action of dirac and dbar on every monomial up to ``max_degree``."""

    def __init__(self, max_degree: int = 64, check: bool = True):
        self.max_degree = max_degree
        self._dirac: Dict[Monomial, QQbarPoly] = {}
        self._dbar: Dict[Monomial, QQbarPoly] = {}
        for h in range(max_degree + 1):
            for b in range(h + 1):
                a = h - b
                self._dirac[(a, b)] = QQbarPoly(_dirac_monomial_table(a, b))
                self._dbar[(a, b)] = QQbarPoly(_dbar_monomial_table(a, b))
        if check:
            self._check_commuting()

    def _check_commuting(self) -> None:
        for mono in self._dirac:
            p = QQbarPoly.monomial(*mono)
            if self._map(self._dbar, self._map(self._dirac, p)) != self._map(
                self._dirac, self._map(self._dbar, p)
            ):
                raise AssertionError(f"dbar dirac != dirac dbar on monomial {mono}")

    def _map(self, tab: Dict[Monomial, QQbarPoly], p: QQbarPoly) -> QQbarPoly:
        out: Dict[Monomial, object] = {}
        for mono, c in p.terms.items():
            if mono not in tab:
                raise CapacityError(
                    f"monomial {mono} exceeds table capacity {self.max_degree}"
                )
            for m, w in tab[mono].terms.items():
                out[m] = out.get(m, 0) + c * w
        return QQbarPoly(out)

    def dirac(self, p: QQbarPoly) -> QQbarPoly:
        return self._map(self._dirac, p)

    def dbar(self, p: QQbarPoly) -> QQbarPoly:
        return self._map(self._dbar, p)

    def laplacian(self, p: QQbarPoly) -> QQbarPoly:
        return self.dbar(self.dirac(p))


@lru_cache(maxsize=None)
def default_table(max_degree: int = 64) -> OperatorTable:
    return OperatorTable(max_degree)


def dirac_apply(p: QQbarPoly) -> QQbarPoly:
    """Cauchy-Fueter operator ``d/dx0 + i d/dx1 + j d/dx2 + k d/dx3``."""
    return _apply(_dirac_monomial_table, p)


def dbar_apply(p: QQbarPoly, table: OperatorTable | None = None) -> QQbarPoly:
    """Conjugate operator ``d/dx0 - i d/dx1 - j d/dx2 - k d/dx3``."""
    if table is not None:
        return table.dbar(p)
    return _apply(_dbar_monomial_table, p)


def laplacian_apply(p: QQbarPoly) -> QQbarPoly:
    return dbar_apply(dirac_apply(p))


def euler_apply(p: QQbarPoly) -> QQbarPoly:
    """Euler operator: scale each monomial by its total degree."""
    return QQbarPoly({(a, b): c * (a + b) for (a, b), c in p.terms.items()})


def dirac_monomial(n: int) -> QQbarPoly:
    """``dirac(q^n) = -2 sum_{k=1}^{n} q^(n-k) qbar^(k-1)``; ``dirac(q) = -2``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return QQbarPoly()
    return QQbarPoly({(n - k, k - 1): -2 for k in range(1, n + 1)})


def fueter_monomial(n: int) -> QQbarPoly:
    """Fueter image of ``q^n``: ``-4 sum_{k=1}^{n-1} (n-k) q^(n-k-1) qbar^(k-1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return QQbarPoly()
    if n == 2:
        return QQbarPoly.constant(-4)
    return QQbarPoly({(n - k - 1, k - 1): -4 * (n - k) for k in range(1, n)})


def fueter_series(f: SliceSeries) -> RegularSeries:
    """Fueter map on coefficients: ``alpha_k = -2 (k+1)(k+2) c_{k+2}``."""
    out = []
    for k in range(max(len(f.coeffs) - 2, 0)):
        out.append(f.coeffs[k + 2] * (-2 * (k + 1) * (k + 2)))
    return RegularSeries(tuple(out))


def fueter_series_inverse(g: RegularSeries) -> SliceSeries:
    """Preimage with vanishing constant and linear terms: ``c_{k+2} = -alpha_k / (2(k+1)(k+2))``."""
    coeffs = [Quaternion(0, 0, 0, 0), Quaternion(0, 0, 0, 0)]
    for k, a in enumerate(g.coeffs):
        coeffs.append(a * Fraction(-1, 2 * (k + 1) * (k + 2)) if a.is_exact
                      else a * (-1.0 / (2 * (k + 1) * (k + 2))))
    return SliceSeries(tuple(coeffs))


# finite differences --------------------------------------------------------

QFunc = Callable[[Quaternion], Quaternion]


def _shifted(f: QFunc, q: np.ndarray, axis: int, step: float) -> np.ndarray:
    return Quaternion.coerce(f(Quaternion(*(q + step * _UNITS[axis])))).to_array()


def _second_derivative(f: QFunc, q: np.ndarray, axis: int, h: float) -> np.ndarray:
    fm2, fm1 = _shifted(f, q, axis, -2 * h), _shifted(f, q, axis, -h)
    fp1, fp2 = _shifted(f, q, axis, h), _shifted(f, q, axis, 2 * h)
    f0 = Quaternion.coerce(f(Quaternion(*q))).to_array()
    return (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h)


def _first_derivative(f: QFunc, q: np.ndarray, axis: int, h: float) -> np.ndarray:
    fm2, fm1 = _shifted(f, q, axis, -2 * h), _shifted(f, q, axis, -h)
    fp1, fp2 = _shifted(f, q, axis, h), _shifted(f, q, axis, 2 * h)
    return (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)


def laplacian_fd(f: QFunc, q: QuaternionLike, h: float = DEFAULT_FD_STEP) -> Quaternion:
    """Five-point-per-axis central-difference Laplacian in four real variables."""
    if h <= 0:
        raise ValueError("step must be positive")
    x = Quaternion.coerce(q).to_array()
    total = sum(_second_derivative(f, x, axis, h) for axis in range(4))
    return Quaternion(*(float(c) for c in total))


def partials_fd(f: QFunc, q: QuaternionLike, h: float = DEFAULT_FD_STEP) -> list:
    x = Quaternion.coerce(q).to_array()
    return [Quaternion(*(float(c) for c in _first_derivative(f, x, axis, h))) for axis in range(4)]


def dirac_fd(f: QFunc, q: QuaternionLike, h: float = DEFAULT_FD_STEP) -> Quaternion:
    """Numerical ``d/dx0 f + i d/dx1 f + j d/dx2 f + k d/dx3 f`` (units on the left)."""
    d0, d1, d2, d3 = partials_fd(f, q, h)
    return d0 + Quaternion(0, 1, 0, 0) * d1 + Quaternion(0, 0, 1, 0) * d2 + Quaternion(0, 0, 0, 1) * d3


def dbar_fd(f: QFunc, q: QuaternionLike, h: float = DEFAULT_FD_STEP) -> Quaternion:
    d0, d1, d2, d3 = partials_fd(f, q, h)
    return d0 - Quaternion(0, 1, 0, 0) * d1 - Quaternion(0, 0, 1, 0) * d2 - Quaternion(0, 0, 0, 1) * d3
