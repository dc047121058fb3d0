from fractions import Fraction

import pytest
from conftest import ball_quaternions, close, exact_quaternions
from hypothesis import given

from fueter.quaternion import Quaternion
from fueter.series import (
    QQbarPoly,
    RegularSeries,
    SliceSeries,
    poly_from_csv,
    poly_to_csv,
    qq_eval,
    series_from_csv,
    series_to_csv,
)

P = QQbarPoly({(2, 0): 3, (1, 1): Fraction(1, 2), (0, 3): -1})


def test_zero_coefficients_pruned():
    assert QQbarPoly({(1, 0): 0}) == QQbarPoly()
    assert not (P - P)
    with pytest.raises(ValueError):
        QQbarPoly({(-1, 0): 1})


def test_arithmetic():
    assert (P * QQbarPoly.monomial(0, 1)) == P.times_qbar()
    assert P.swap().swap() == P
    assert (P + 1)[(0, 0)] == 1
    assert P.degree() == 3 and not P.is_homogeneous()
    assert QQbarPoly.monomial(2, 1).is_homogeneous(3)
    assert P.coefficient_sum() == Fraction(5, 2)


@given(exact_quaternions)
def test_exact_eval_matches_direct_products(q):
    direct = q * q * 3 + q * q.conj() * Fraction(1, 2) - q.conj() ** 3
    assert qq_eval(P, q) == direct


@given(ball_quaternions)
def test_float_eval_matches_exact_path(q):
    assert close(P(q), qq_eval(P, Quaternion(*(Fraction(c) for c in q.as_tuple()))), 1e-12)


def test_slice_series_horner():
    f = SliceSeries((1, Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0)))
    q = Quaternion(0.1, 0.2, -0.3, 0.4)
    assert close(f(q), Quaternion(1.0) + q * Quaternion(0, 1, 0, 0) + q * q * Quaternion(0, 0, 1, 0), 1e-15)
    assert f.coefficient(7) == Quaternion(0, 0, 0, 0)


def test_regular_series_uses_appell_basis():
    # Q_0 = 1, Q_1 = (2q + qbar)/3
    g = RegularSeries((Quaternion(0, 0, 0, 1), 3))
    q = Quaternion(Fraction(1, 2), 1, 0, 0)
    assert g(q) == Quaternion(0, 0, 0, 1) + q * 2 + q.conj()


def test_csv_round_trips():
    s = SliceSeries((Fraction(1, 3), Quaternion(0.25, -1.5, 0, 2)))
    text = series_to_csv(s)
    assert text.splitlines()[0] == "k,w,x,y,z"
    assert series_from_csv(text) == s
    assert isinstance(series_from_csv(text, RegularSeries), RegularSeries)
    assert poly_from_csv(poly_to_csv(P)) == P


def test_csv_rejects_bad_header_and_duplicates():
    with pytest.raises(ValueError):
        series_from_csv("i,w,x,y,z\n0,1,0,0,0\n")
    with pytest.raises(ValueError):
        series_from_csv("k,w,x,y,z\n0,1,0,0,0\n0,1,0,0,0\n")
    with pytest.raises(ValueError):
        poly_from_csv("a,b\n")
