import cmath
import math

import numpy as np
import pytest
from conftest import ball_quaternions, close
from hypothesis import given, settings

from fueter import kernels as K
from fueter.quaternion import QI, QJ, Quaternion, imaginary_unit

q0 = Quaternion(0.2, 0.1, -0.3, 0.15)
r0 = Quaternion(0.1, -0.2, 0.25, 0.3)
q1 = Quaternion(0.5, 0.1, -0.3, 0.15)
r1 = Quaternion(0.3, -0.2, 0.25, 0.3)

# regression values, each also checked against an independent route in the verify suites
FROZEN = [
    (K.fock_kernel, q0, r0, (0.9761215241461565, 0.17769145160946156, -0.005009974106214628, -0.012142446256378177)),
    (K.fock_fueter_kernel, q0, r0, (0.3819126174628174, -0.048514076751556064, 0.08051769617492216, 0.10976489392031234)),
    (K.bergman_ball, q0, r0, (0.9857267418107155, 0.3653349251640611, 0.044924980216247204, -0.044918561601541715)),
    (K.bergman_fueter_ball, q0, r0, (2.610911888063318, 0.3754620990077484, 0.28409558991629924, 0.41384782300292466)),
    (K.rkhs_G, q0, r0, (2.0853167664829675, 0.18746480306604862, -0.10391378235420062, -0.07189223656742227)),
    (K.rkhs_L, q0, r0, (14.41394795897127, 4.888497920167275, -1.0274366774595518, -2.81668408292379)),
    (K.bergman_halfspace, q1, r1, (0.1640097388565046, 0.09486100175433619, 0.2574020940244931, 0.14628814939132162)),
    (K.bergman_halfball, q1, r1, (1.639784502368117, 1.034786082394727, 0.7546901473738414, 0.1690333324124516)),
    (K.bergman_fueter_halfspace, q1, r1, (0.8024232356749168, 0.042835243313370075, -2.042139875745295, -3.805087797149827)),
    (K.bergman_fueter_halfball, q1, r1, (8.192143198753339, 0.8091929807043234, -5.710362998983217, -9.930159583655575)),
]


@pytest.mark.parametrize("fn,q,r,expected", FROZEN, ids=[f[0].__name__ for f in FROZEN])
def test_frozen_values(fn, q, r, expected):
    assert close(fn(q, r), Quaternion(*expected), 1e-13)


def test_fock_examples():
    assert close(K.fock_kernel(q0, Quaternion(0.0)), Quaternion(1.0), 0)
    assert close(K.fock_kernel(QI, QI), Quaternion(math.e), 1e-14)
    assert K.fock_tail(Quaternion(2.0), Quaternion(3.0), 10) > 0


def test_fock_fueter_real_first_argument():
    p = Quaternion(0.4, -1.0, 0.5, 0.2)
    z, J = K.to_slice(p)
    ref = Quaternion.from_complex(-2 * z.conjugate() ** 2 * cmath.exp(0.8 * z.conjugate()), J)
    assert close(K.fock_fueter_kernel(Quaternion(0.8), p), ref, 1e-13)
    assert close(K.fock_fueter_kernel(q0, Quaternion(0.0)), Quaternion(0.0), 0)


def test_fock_fueter_far_nodes_stay_finite():
    vals = K.fock_fueter_array(Quaternion(0.3, 0.2, 0, 0), np.array([18 + 18j, -17j]), QJ)
    assert np.all(np.isfinite(vals))


def test_ball_examples():
    assert close(K.bergman_ball(Quaternion(0.0), r0), Quaternion(1.0), 1e-15)
    assert close(K.bergman_ball(Quaternion(0.3), Quaternion(0.5)), Quaternion(0.85**-2), 1e-14)
    assert close(K.bergman_fueter_ball(Quaternion(0.0), r0), r0.conj() ** 2 * -12.0, 1e-14)


def test_domain_errors():
    with pytest.raises(K.DomainError):
        K.bergman_ball(Quaternion(1.0), r0)
    with pytest.raises(K.DomainError):
        K.bergman_ball(Quaternion(1.2), Quaternion(0.9), form="series")
    with pytest.raises(K.DomainError):
        K.bergman_halfspace(Quaternion(-0.1), r1)
    with pytest.raises(K.DomainError):
        K.bergman_fueter_halfball(Quaternion(0.0), r1)
    with pytest.raises(K.DomainError):
        K.bergman_wedge(Quaternion(1.0), Quaternion(1.0), 2)
    with pytest.raises(K.DomainError):
        K.rkhs_L(Quaternion(2.0), Quaternion(0.9))
    with pytest.raises(ValueError):
        K.bergman_halfspace(q1, r1, measure="counting")


def test_halfspace_measure_conventions():
    one = Quaternion(1.0)
    assert close(K.bergman_halfspace(one, one), Quaternion(1 / (4 * math.pi)), 1e-16)
    assert close(K.bergman_halfspace(one, one, measure="normalized"), Quaternion(0.25), 1e-16)
    half = Quaternion(0.5)
    assert close(K.bergman_halfball(half, half), Quaternion(16 / 9 + 1), 1e-14)
    assert close(K.bergman_halfball(half, half, measure="lebesgue"), Quaternion(16 / 9 + 1 / math.pi), 1e-14)


def _printed_wedge(q, r, n):
    """The wedge formula with the leading sign (-1)^n."""
    return K.bergman_wedge(q, r, n) * ((-1) ** n * K.wedge_sign(n))


def test_wedge_sign_convention():
    # a reproducing kernel is positive on the diagonal; the (-1)^n sign makes it negative
    for n in (1, 2, 3, 4):
        z = cmath.rect(0.9, math.pi / 2 - math.pi / (3 * n))
        assert K.wedge_complex_kernel(z, z, n).real > 0
    for n in (1, 3, 5):
        x = Quaternion(0.3, 0.8, 0.0, 0.0)
        assert K.in_wedge(x, n)
        assert K.bergman_wedge(x, x, n).w > 0
        assert close(_printed_wedge(x, x, n), -K.bergman_wedge(x, x, n), 1e-15)
    assert close(K.bergman_wedge(Quaternion(1.0), Quaternion(1.0), 1), Quaternion(0.25), 1e-15)


def test_wedge_even_order_singular_on_the_diagonal():
    # for even n the sphere through q carries a pole of the kernel in r at r = q
    x = Quaternion(0.3, 0.8, 0.0, 0.0)
    for form in ("closed", "extension"):
        with pytest.raises(K.DomainError):
            K.bergman_wedge(x, x, 2, form=form)


def test_wedge_frozen_and_membership():
    a, b = Quaternion(0.5, 0.3, 0.1, 0.2), Quaternion(0.4, 0.2, -0.3, 0.1)
    assert close(K.bergman_wedge(a, b, 2),
                 Quaternion(-30.113595784125696, -25.486665333307425, -4.177947439352678, 40.47220435812715), 1e-11)
    assert K.in_wedge(Quaternion(0.5, 0.0, 0.0, -0.3), 2)
    assert not K.in_wedge(Quaternion(0.5, 0.0, 0.0, 0.0), 2)
    assert not K.in_wedge(Quaternion(-0.5, 0.1, 0.0, 0.0), 3)


@settings(max_examples=25, deadline=None)
@given(ball_quaternions, ball_quaternions)
def test_ball_series_and_closed_forms(q, r):
    assert close(K.bergman_ball(q, r, 300, "series"), K.bergman_ball(q, r), 1e-10)
    assert close(K.bergman_fueter_ball(q, r, 300, "series"), K.bergman_fueter_ball(q, r), 1e-8)
    assert close(K.generating_series(q, r), K.generating_closed(q, r), 1e-8)


@settings(max_examples=25, deadline=None)
@given(ball_quaternions, ball_quaternions)
def test_hermitian_symmetry(q, r):
    assert close(K.bergman_ball(q, r).conj(), K.bergman_ball(r, q), 1e-12)
    assert close(K.rkhs_G(q, r).conj(), K.rkhs_G(r, q), 1e-12)


def test_array_form_matches_scalar():
    J = imaginary_unit(0.0, 0.6, 0.8)
    zr = np.array([0.2 + 0.3j, -0.4 + 0.1j])
    arr = K.bergman_fueter_ball_array(q0, zr, J)
    for z, row in zip(zr, arr):
        r = Quaternion(z.real) + J * z.imag
        assert close(Quaternion(*row), K.bergman_fueter_ball(q0, r), 1e-13)


def test_tails_and_dispatch():
    assert K.series_tail(lambda k: 1.0, 0.5, 10) == pytest.approx(0.5**11 / 0.5, rel=1e-12)
    assert K.bergman_ball_tail(q0, r0, 300) < 1e-100
    value, bound = K.evaluate(K.KernelSpec("bergman_ball", 50, "series"), q0, r0)
    assert close(value, K.bergman_ball(q0, r0), 1e-12) and bound < 1e-20
    assert K.evaluate(K.KernelSpec("bergman_wedge", wedge_n=2), Quaternion(0.5, 0.3, 0, 0),
                      Quaternion(0.4, 0.2, 0, 0))[1] == 0.0
    with pytest.raises(ValueError):
        K.KernelSpec("bergman_wedge", wedge_n=0)
    with pytest.raises(ValueError):
        K.KernelSpec("szego")
