from fractions import Fraction

import pytest
import sympy as sp
from conftest import ball_quaternions, close
from hypothesis import given, settings

from fueter.operators import (
    CapacityError,
    OperatorTable,
    dbar_apply,
    dirac_apply,
    dirac_fd,
    dirac_monomial,
    euler_apply,
    fueter_monomial,
    fueter_series,
    fueter_series_inverse,
    laplacian_apply,
    laplacian_fd,
)
from fueter.quaternion import Quaternion
from fueter.series import QQbarPoly, RegularSeries, SliceSeries

X = sp.symbols("x0:4", real=True)


def _smul(a, b):
    a1, b1, c1, d1 = a
    a2, b2, c2, d2 = b
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _symbolic(p: QQbarPoly):
    """Componentwise expansion of sum c q^a qbar^b in x0..x3."""
    q = X
    qb = (X[0], -X[1], -X[2], -X[3])
    out = (0, 0, 0, 0)
    for (a, b), c in p.items():
        m = (1, 0, 0, 0)
        for _ in range(a):
            m = _smul(m, q)
        for _ in range(b):
            m = _smul(m, qb)
        out = tuple(o + sp.Rational(c.numerator, c.denominator) * t if isinstance(c, Fraction) else o + c * t
                    for o, t in zip(out, m))
    return tuple(sp.expand(o) for o in out)


def _symbolic_operator(f, sign):
    units = [(1, 0, 0, 0), (0, sign, 0, 0), (0, 0, sign, 0), (0, 0, 0, sign)]
    out = (0, 0, 0, 0)
    for e, x in zip(units, X):
        d = tuple(sp.diff(c, x) for c in f)
        out = tuple(o + t for o, t in zip(out, _smul(e, d)))
    return tuple(sp.expand(o) for o in out)


@pytest.mark.parametrize("a,b", [(a, h - a) for h in range(5) for a in range(h + 1)])
def test_monomial_tables_match_componentwise_derivatives(a, b):
    p = QQbarPoly.monomial(a, b)
    f = _symbolic(p)
    assert _symbolic_operator(f, 1) == _symbolic(dirac_apply(p))
    assert _symbolic_operator(f, -1) == _symbolic(dbar_apply(p))


def test_small_values_by_hand():
    assert dirac_apply(QQbarPoly.monomial(1, 0)) == QQbarPoly.constant(-2)
    assert dirac_apply(QQbarPoly.monomial(0, 1)) == QQbarPoly.constant(4)
    assert dbar_apply(QQbarPoly.monomial(0, 1)) == QQbarPoly.constant(-2)
    assert dirac_apply(QQbarPoly.monomial(2, 1)) == QQbarPoly({(1, 1): -2, (2, 0): 2})
    assert dbar_apply(QQbarPoly.monomial(2, 1)) == QQbarPoly({(1, 1): 6})
    assert fueter_monomial(4) == QQbarPoly({(0, 2): -4, (1, 1): -8, (2, 0): -12})
    assert laplacian_apply(QQbarPoly.monomial(3, 0)) == QQbarPoly({(1, 0): -8, (0, 1): -4})


def test_dirac_monomial_closed_form():
    for n in range(12):
        assert dirac_monomial(n) == dirac_apply(QQbarPoly.monomial(n, 0))
    with pytest.raises(ValueError):
        fueter_monomial(-1)


def test_operator_table_and_capacity():
    table = OperatorTable(8)
    p = QQbarPoly({(3, 2): 1, (0, 4): Fraction(1, 3)})
    assert table.laplacian(p) == laplacian_apply(p)
    assert dbar_apply(p, table) == dbar_apply(p)
    with pytest.raises(CapacityError):
        table.dirac(QQbarPoly.monomial(9, 0))


def test_euler_operator():
    assert euler_apply(QQbarPoly({(2, 1): 5, (0, 0): 7})) == QQbarPoly({(2, 1): 15})


def test_fueter_series_coefficient_map_round_trip():
    f = SliceSeries((1, 2, Quaternion(0, 1, 0, 0), Fraction(1, 2)))
    g = fueter_series(f)
    assert g == RegularSeries((Quaternion(0, -4, 0, 0), -6))
    back = fueter_series_inverse(g)
    assert back.coeffs[2:] == f.coeffs[2:] and back.coeffs[0] == Quaternion(0, 0, 0, 0)


@settings(max_examples=20, deadline=None)
@given(ball_quaternions)
def test_finite_differences_agree_with_exact_operators(q):
    p = QQbarPoly({(3, 1): 1, (0, 2): -2})
    assert close(laplacian_fd(p, q), laplacian_apply(p)(q), 1e-6)
    assert close(dirac_fd(p, q), dirac_apply(p)(q), 1e-8)
    assert close(dirac_fd(fueter_monomial(6), q), Quaternion(0.0), 1e-8)


def test_fd_step_must_be_positive():
    with pytest.raises(ValueError):
        laplacian_fd(lambda x: x, Quaternion(0.0), h=0)
