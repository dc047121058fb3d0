"""Deterministic Gaussian rules for the measures used by the kernels.

Domains and their normalisation:

* ``real_line_gauss``  weight ``exp(-x^2)`` on the real line (unnormalised)
* ``slice_gauss``      ``exp(-|p|^2) / pi`` on a slice plane (total mass 1)
* ``unit_disk``        Lebesgue / pi on the unit disk of a slice (mass 1)
* ``half_disk``        Lebesgue / pi on ``{|z| < 1, Re z > 0}`` (mass 1/2)
* ``r4_gauss``         ``exp(-|q|^2) / pi^2`` on R^4 (mass 1)

Node weights already include the weight function; ``integrate`` is a plain
weighted sum, which numpy reduces pairwise (fixed order, reproducible).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .quaternion import QI, Quaternion, embed, from_array

R4_NODE_CAP = 2_000_000


class QuadratureError(RuntimeError):
    """Quadrature estimate exceeds the requested tolerance."""


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes plus positive weights for one domain.

    ``nodes`` holds reals (real line), complex coordinates inside the slice
    of ``unit`` (planar rules) or an ``(n, 4)`` array (R^4).
    """

    domain: str
    nodes: np.ndarray
    weights: np.ndarray
    order: int
    unit: Optional[Quaternion] = None

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def points(self) -> np.ndarray:
        """Nodes as ``(n, 4)`` quaternion arrays (planar rules and R^4)."""
        if self.domain == "real_line_gauss":
            out = np.zeros((len(self.nodes), 4))
            out[:, 0] = self.nodes
            return out
        if self.domain == "r4_gauss":
            return self.nodes
        return embed(self.nodes, self.unit)

    def integrate(self, values) -> np.ndarray:
        """Weighted sum over the first axis of ``values`` (node-major)."""
        values = np.asarray(values)
        w = self.weights.reshape((-1,) + (1,) * (values.ndim - 1))
        return np.sum(w * values, axis=0)

    def integrate_quaternion(self, f: Callable[[Quaternion], Quaternion]) -> Quaternion:
        """Pointwise quadrature of a Quaternion-valued callable (slow path)."""
        vals = np.array([Quaternion.coerce(f(from_array(p))).to_float().to_array() for p in self.points])
        return from_array(self.integrate(vals))


@lru_cache(maxsize=None)
def _hermgauss(n: int):
    x, w = np.polynomial.hermite.hermgauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=None)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_hermite(n: int) -> QuadratureRule:
    """n-point rule for ``int f(x) exp(-x^2) dx``, exact for degree <= 2n-1."""
    if n < 1:
        raise ValueError("order must be >= 1")
    x, w = _hermgauss(n)
    return QuadratureRule("real_line_gauss", x, w, n)


def slice_gauss(I: Quaternion = QI, n: int = 80, scale=(1.0, 1.0)) -> QuadratureRule:
    """Tensor Gauss-Hermite rule for ``(1/pi) exp(-|p|^2) dA`` on the slice of I.

    ``scale = (sa, sb)`` stretches the nodes to ``(sa u, sb v)`` and folds the
    change of weight into the weights; use it when the integrand itself
    carries a factor like ``exp(+b^2/2)`` that the plain rule resolves slowly.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    sa, sb = (float(s) for s in scale)
    if sa <= 0 or sb <= 0:
        raise ValueError("scales must be positive")
    x, w = _hermgauss(n)
    wa = w * sa * np.exp((1.0 - sa * sa) * x * x)
    wb = w * sb * np.exp((1.0 - sb * sb) * x * x)
    X, Y = np.meshgrid(sa * x, sb * x, indexing="ij")
    W = np.outer(wa, wb) / math.pi
    return QuadratureRule("slice_gauss", (X + 1j * Y).ravel(), W.ravel(), n, I)


def _polar_rule(I, radial_n, angles, angle_weights, domain, order):
    r, rw = _leggauss(radial_n)
    r = 0.5 * (r + 1.0)
    rw = 0.5 * rw * r  # includes the Jacobian r
    R, T = np.meshgrid(r, angles, indexing="ij")
    W = np.outer(rw, angle_weights) / math.pi
    return QuadratureRule(domain, (R * np.exp(1j * T)).ravel(), W.ravel(), order, I)


def disk_rule(I: Quaternion = QI, radial_n: int = 40, angular_n: int = 80) -> QuadratureRule:
    """Gauss-Legendre in r times the uniform angular rule; measure ``dA/pi``.

    Exact for ``z^a zbar^b`` when ``a + b + 1 <= 2*radial_n - 1`` and
    ``|a - b| < angular_n``.
    """
    if radial_n < 1 or angular_n < 1:
        raise ValueError("orders must be >= 1")
    theta = 2 * math.pi * (np.arange(angular_n) + 0.5) / angular_n
    tw = np.full(angular_n, 2 * math.pi / angular_n)
    return _polar_rule(I, radial_n, theta, tw, "unit_disk", max(radial_n, angular_n))


def half_disk_rule(I: Quaternion = QI, radial_n: int = 40, angular_n: int = 80) -> QuadratureRule:
    """Half disk ``Re z > 0``: Gauss-Legendre nodes in the open angle (-pi/2, pi/2)."""
    if radial_n < 1 or angular_n < 1:
        raise ValueError("orders must be >= 1")
    t, tw = _leggauss(angular_n)
    theta = 0.5 * math.pi * t
    return _polar_rule(I, radial_n, theta, 0.5 * math.pi * tw, "half_disk", max(radial_n, angular_n))


def r4_gauss(n: int, node_cap: int = R4_NODE_CAP) -> QuadratureRule:
    """4-fold tensor Gauss-Hermite rule for ``exp(-|q|^2) dq / pi^2``."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n**4 > node_cap:
        raise ValueError(f"{n**4} nodes exceed the cap of {node_cap}")
    x, w = _hermgauss(n)
    grids = np.meshgrid(x, x, x, x, indexing="ij")
    nodes = np.stack([g.ravel() for g in grids], axis=-1)
    wg = np.meshgrid(w, w, w, w, indexing="ij")
    weights = (wg[0] * wg[1] * wg[2] * wg[3]).ravel() / math.pi**2
    return QuadratureRule("r4_gauss", nodes, weights, n)


def check_estimate(value, reference, tol: Optional[float], what: str) -> float:
    """Difference between two quadrature orders; raises when above ``tol``."""
    err = float(np.max(np.abs(np.asarray(value) - np.asarray(reference))))
    if tol is not None and err > tol:
        raise QuadratureError(f"{what}: estimated quadrature error {err:.3e} exceeds {tol:.1e}")
    return err
