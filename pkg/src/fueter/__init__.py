"""Quaternionic Fueter mapping: Appell polynomials, kernels, transforms."""

from .quaternion import ONE, QI, QJ, QK, Quaternion, imaginary_unit, slice_decompose, to_slice
from .series import QQbarPoly, RegularSeries, SliceSeries

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "QI",
    "QJ",
    "QK",
    "Quaternion",
    "QQbarPoly",
    "RegularSeries",
    "SliceSeries",
    "imaginary_unit",
    "slice_decompose",
    "to_slice",
    "__version__",
]
