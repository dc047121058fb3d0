import math
from fractions import Fraction

import numpy as np
import pytest
from conftest import ball_quaternions, close
from hypothesis import given

from fueter.appell import (
    AppellCache,
    appell_coefficient,
    appell_coefficient_pochhammer,
    appell_eval,
    appell_P,
    appell_Q,
    appell_Q_via_fueter,
    appell_T,
    appell_values,
    exp_tail_bound,
    pochhammer,
    regular_exp,
    t_normalizer,
)
from fueter.operators import dirac_apply, fueter_monomial
from fueter.quaternion import Quaternion


def test_frozen_low_degree_polynomials():
    assert appell_Q(0).items() == [((0, 0), 1)]
    assert appell_Q(2).terms == {(2, 0): Fraction(1, 2), (1, 1): Fraction(1, 3), (0, 2): Fraction(1, 6)}
    assert appell_Q(3).terms == {(3, 0): Fraction(2, 5), (2, 1): Fraction(3, 10), (1, 2): Fraction(1, 5),
                                 (0, 3): Fraction(1, 10)}


def test_frozen_exact_values():
    assert appell_Q(2)(Quaternion(0, Fraction(1, 2), 0, 0)) == Quaternion(Fraction(-1, 12), 0, 0, 0)
    q = Quaternion(Fraction(1, 3), Fraction(1, 2), Fraction(-1, 4), 1)
    assert appell_Q(3)(q) == Quaternion(Fraction(-173, 432), Fraction(-109, 1440), Fraction(109, 2880),
                                        Fraction(-109, 720))


def test_coefficients():
    assert pochhammer(3, 0) == 1 and pochhammer(3, 2) == 12
    assert appell_coefficient(4, 0) == Fraction(1, 3)
    assert all(appell_coefficient(k, j) == appell_coefficient_pochhammer(k, j) for k in range(12) for j in range(k + 1))
    with pytest.raises(ValueError):
        appell_coefficient(2, 3)


def test_relations_to_fueter_images():
    for k in range(10):
        assert appell_Q_via_fueter(k) == appell_Q(k)
        assert appell_P(k) == fueter_monomial(k + 2) * Fraction(1, math.factorial(k + 2))
        assert not dirac_apply(appell_Q(k))


def test_t_normalizer_and_T():
    assert t_normalizer(0) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert t_normalizer(5) == pytest.approx(math.sqrt(42 / 120), rel=1e-14)
    assert appell_T(0).terms[(0, 0)] == pytest.approx(math.sqrt(2))


@given(ball_quaternions)
def test_recurrence_matches_polynomials(q):
    for k in (0, 1, 4, 9):
        assert close(appell_eval(k, q), appell_Q(k)(q), 1e-13)


def test_vectorised_values_and_scaling():
    z = np.array([0.3 + 0.2j, -0.1 + 0.5j])
    plain = appell_values(z, 10)
    assert plain.shape == (11, 2)
    scaled = appell_values(z, 10, factorial_scaled=True)
    facts = np.array([math.factorial(k) for k in range(11)], dtype=float)[:, None]
    assert np.allclose(scaled * facts, plain, rtol=1e-13, atol=0)
    # no overflow far out
    assert np.all(np.isfinite(appell_values(40.0 + 0j, 400, factorial_scaled=True)))


def test_regular_exponential():
    value, tail = regular_exp(Quaternion(0.7), 60)
    assert close(value, Quaternion(math.exp(0.7)), 1e-15)
    assert tail < 1e-60
    assert exp_tail_bound(0.0, 3) == 0.0
    assert exp_tail_bound(1.0, 0) == pytest.approx(math.e - 1, rel=1e-14)


def test_cache():
    cache = AppellCache(6)
    assert len(cache.Q) == 7 and cache.coefficients[(6, 0)] == Fraction(1, 4)
    assert cache.normalizers[2] == pytest.approx(math.sqrt(6))
