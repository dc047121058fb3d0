"""Polynomials in (q, conj q) and right-coefficient series.

``QQbarPoly`` stores real coefficients of monomials ``q^a conj(q)^b``.
Since ``q`` and ``conj q`` commute and both lie in the slice of ``q``,
a float evaluation reduces to the complex polynomial ``P(z, conj z)``
computed in that slice.  Exact (``Fraction``) evaluation multiplies
quaternions directly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

import numpy as np

from .quaternion import Quaternion, QuaternionLike, to_slice

Monomial = Tuple[int, int]


class QQbarPoly:
    """Finite real combination of monomials ``q^a qbar^b``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: Dict[Monomial, Number] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial {(a, b)}")
            if c != 0:
                clean[(int(a), int(b))] = c
        self._terms = clean

    # construction -----------------------------------------------------

    @classmethod
    def constant(cls, c) -> "QQbarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "QQbarPoly":
        return cls({(a, b): c})

    # container protocol -----------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Number]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, mono: Monomial):
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self._terms))

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    def is_homogeneous(self, h: int | None = None) -> bool:
        degs = {a + b for a, b in self._terms}
        if not degs:
            return True
        return len(degs) == 1 and (h is None or degs == {h})

    # arithmetic -------------------------------------------------------

    def __add__(self, other) -> "QQbarPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return QQbarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QQbarPoly":
        return QQbarPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "QQbarPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QQbarPoly":
        return (-self) + other

    def __mul__(self, other) -> "QQbarPoly":
        if isinstance(other, QQbarPoly):
            out: Dict[Monomial, Number] = {}
            for (a, b), c in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    key = (a + a2, b + b2)
                    out[key] = out.get(key, 0) + c * c2
            return QQbarPoly(out)
        if isinstance(other, Number):
            return QQbarPoly({m: c * other for m, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QQbarPoly":
        if isinstance(other, int):
            other = Fraction(other)
        return QQbarPoly({m: c / other for m, c in self._terms.items()})

    def times_q(self, n: int = 1) -> "QQbarPoly":
        return QQbarPoly({(a + n, b): c for (a, b), c in self._terms.items()})

    def times_qbar(self, n: int = 1) -> "QQbarPoly":
        return QQbarPoly({(a, b + n): c for (a, b), c in self._terms.items()})

    def swap(self) -> "QQbarPoly":
        """Exchange the roles of q and conj q (the conjugate polynomial)."""
        return QQbarPoly({(b, a): c for (a, b), c in self._terms.items()})

    def coefficient_sum(self):
        return sum(self._terms.values(), 0)

    def to_float(self) -> "QQbarPoly":
        return QQbarPoly({m: float(c) for m, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "QQbarPoly(0)"
        parts = [f"{c}*q^{a}*qbar^{b}" for (a, b), c in self.items()]
        return "QQbarPoly(" + " + ".join(parts) + ")"

    # evaluation -------------------------------------------------------

    def eval_complex(self, z):
        """Evaluate ``P(z, conj z)`` for complex scalars or arrays."""
        z = np.asarray(z, dtype=complex)
        zb = np.conj(z)
        out = np.zeros_like(z)
        for (a, b), c in self._terms.items():
            out = out + float(c) * z**a * zb**b
        return out

    def __call__(self, q: QuaternionLike) -> Quaternion:
        return qq_eval(self, q)


def _as_poly(v) -> QQbarPoly | None:
    if isinstance(v, QQbarPoly):
        return v
    if isinstance(v, Number):
        return QQbarPoly.constant(v)
    return None


def poly_add(p: QQbarPoly, other: Union[QQbarPoly, Number]) -> QQbarPoly:
    return p + other


def poly_scale(p: QQbarPoly, c: Number) -> QQbarPoly:
    return p * c


def qq_eval(p: QQbarPoly, q: QuaternionLike) -> Quaternion:
    """``sum coeff(a,b) q^a conj(q)^b``."""
    q = Quaternion.coerce(q)
    if q.is_exact and all(isinstance(c, (int, Fraction)) for c in p.terms.values()):
        return _qq_eval_exact(p, q)
    z, unit = to_slice(q)
    return Quaternion.from_complex(complex(p.eval_complex(z)), unit)


def _qq_eval_exact(p: QQbarPoly, q: Quaternion) -> Quaternion:
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    if not p:
        return zero
    qb = q.conj()
    max_a = max(a for a, _ in p.terms)
    max_b = max(b for _, b in p.terms)
    qpow = [q**0]
    for _ in range(max_a):
        qpow.append(qpow[-1] * q)
    qbpow = [q**0]
    for _ in range(max_b):
        qbpow.append(qbpow[-1] * qb)
    out = zero
    for (a, b), c in p.items():
        out = out + (qpow[a] * qbpow[b]) * c
    return out


# right-coefficient series -------------------------------------------------


def _coeff_tuple(coeffs: Iterable) -> Tuple[Quaternion, ...]:
    return tuple(Quaternion.coerce(c) for c in coeffs)


@dataclass(frozen=True)
class SliceSeries:
    """``f(q) = sum_k q^k c_k`` with quaternion coefficients on the right."""

    coeffs: Tuple[Quaternion, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _coeff_tuple(self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, q: QuaternionLike) -> Quaternion:
        return slice_eval(self, q)

    def coefficient(self, k: int) -> Quaternion:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Quaternion(0, 0, 0, 0)


@dataclass(frozen=True)
class RegularSeries:
    """``g(q) = sum_k Q_k(q) alpha_k`` over the Appell basis."""

    coeffs: Tuple[Quaternion, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _coeff_tuple(self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, q: QuaternionLike) -> Quaternion:
        return regular_eval(self, q)

    def coefficient(self, k: int) -> Quaternion:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Quaternion(0, 0, 0, 0)


def slice_eval(f: SliceSeries, q: QuaternionLike) -> Quaternion:
    """Horner evaluation of ``sum q^k c_k``."""
    q = Quaternion.coerce(q)
    if not f.coeffs:
        return Quaternion(0, 0, 0, 0)
    acc = f.coeffs[-1]
    for c in reversed(f.coeffs[:-1]):
        acc = q * acc + c
    return acc


def regular_eval(g: RegularSeries, q: QuaternionLike) -> Quaternion:
    """``sum Q_k(q) alpha_k`` (Appell polynomials act from the left)."""
    from .appell import appell_Q, appell_values

    q = Quaternion.coerce(q)
    if not g.coeffs:
        return Quaternion(0, 0, 0, 0)
    n = len(g.coeffs)
    exact = q.is_exact and all(c.is_exact for c in g.coeffs)
    if exact:
        out = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
        for k, a in enumerate(g.coeffs):
            out = out + qq_eval(appell_Q(k), q) * a
        return out
    z, unit = to_slice(q)
    values = appell_values(z, n - 1)
    out = Quaternion(0.0, 0.0, 0.0, 0.0)
    for v, a in zip(values, g.coeffs):
        out = out + Quaternion.from_complex(complex(v), unit) * a.to_float()
    return out


# coefficient CSV ----------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _parse(tok: str):
    tok = tok.strip()
    try:
        return Fraction(tok) if ("." not in tok and "e" not in tok.lower()) else float(tok)
    except ValueError:
        return float(tok)


def series_to_csv(series: Union[SliceSeries, RegularSeries]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "w", "x", "y", "z"])
    for k, c in enumerate(series.coeffs):
        w.writerow([k, *(_fmt(v) for v in c.as_tuple())])
    return buf.getvalue()


def series_from_csv(text: str, kind: type = SliceSeries):
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [h.strip() for h in rows[0]] != ["k", "w", "x", "y", "z"]:
        raise ValueError("series CSV needs the header k,w,x,y,z")
    entries = {}
    for row in rows[1:]:
        if not row:
            continue
        k = int(row[0])
        if k < 0 or k in entries:
            raise ValueError(f"bad or duplicate index {k}")
        entries[k] = Quaternion(*(_parse(t) for t in row[1:5]))
    n = max(entries, default=-1) + 1
    coeffs = [entries.get(k, Quaternion(0, 0, 0, 0)) for k in range(n)]
    return kind(tuple(coeffs))


def poly_to_csv(p: QQbarPoly) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "coeff"])
    for (a, b), c in p.items():
        w.writerow([a, b, _fmt(c)])
    return buf.getvalue()


def poly_from_csv(text: str) -> QQbarPoly:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [h.strip() for h in rows[0]] != ["a", "b", "coeff"]:
        raise ValueError("polynomial CSV needs the header a,b,coeff")
    terms: Dict[Monomial, Number] = {}
    for row in rows[1:]:
        if not row:
            continue
        key = (int(row[0]), int(row[1]))
        terms[key] = terms.get(key, 0) + _parse(row[2])
    return QQbarPoly(terms)
