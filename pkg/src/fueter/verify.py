"""Named verification suites; each check reports its measured error and tolerance."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from . import kernels as K
from . import transforms as T
from .appell import (
    appell_coefficient,
    appell_coefficient_pochhammer,
    appell_eval,
    appell_Q,
    appell_Q_via_fueter,
    appell_T,
    regular_exp,
)
from .operators import (
    dbar_apply,
    dirac_apply,
    dirac_fd,
    euler_apply,
    fueter_monomial,
    fueter_series,
    fueter_series_inverse,
    laplacian_apply,
    laplacian_fd,
    partials_fd,
)
from .quadrature import disk_rule, gauss_hermite, half_disk_rule, r4_gauss, slice_gauss
from .quaternion import QI, Quaternion, qconj, qmul, random_unit, to_slice
from .series import QQbarPoly, RegularSeries, SliceSeries

SUITE_NAMES = (
    "appell",
    "fueter-map",
    "fock-kernel",
    "transforms",
    "integral-reps",
    "bergman-ball",
    "bergman-halfspace",
    "bergman-halfball",
    "wedge",
    "generating-function",
    "rkhs",
)

FD_STEP = 1e-3


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    truncation: int = K.DEFAULT_TRUNCATION
    quad_order: int = 80
    tol: float = 1e-8
    seed: int = 0
    max_degree: int = 30
    output: Optional[str] = None

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_degree < 0:
            raise ValueError("max-degree must be non-negative")
        if self.truncation < self.max_degree + 2:
            raise ValueError("truncation must be at least max-degree + 2")
        if self.quad_order < 1:
            raise ValueError("quad-order must be >= 1")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    error: float
    tol: float
    exact: bool = False

    @property
    def passed(self) -> bool:
        if self.exact:
            return self.error == 0
        return bool(self.error <= self.tol)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.exact:
            return f"{status} {self.suite}/{self.name} (exact)"
        return f"{status} {self.suite}/{self.name} error={self.error:.3e} tol={self.tol:.1e}"


class _Checks:
    def __init__(self, suite: str):
        self.suite = suite
        self.results: List[CheckResult] = []

    def close(self, name: str, error: float, tol: float) -> None:
        err = float(error)
        if math.isnan(err):
            err = math.inf
        self.results.append(CheckResult(self.suite, name, err, tol))

    def exact(self, name: str, ok: bool) -> None:
        self.results.append(CheckResult(self.suite, name, 0.0 if ok else 1.0, 0.0, exact=True))


def _d(a: Quaternion, b: Quaternion) -> float:
    return abs((Quaternion.coerce(a) - Quaternion.coerce(b)).to_float())


def _rel(a, b) -> float:
    b = Quaternion.coerce(b).to_float()
    return _d(a, b) / max(1.0, abs(b))


# random points ------------------------------------------------------------------


def ball_point(rng: np.random.Generator, radius: float = 0.6) -> Quaternion:
    """Components uniform in [-0.6, 0.6], redrawn until ``|q| <= radius``."""
    while True:
        c = rng.uniform(-0.6, 0.6, 4)
        if np.linalg.norm(c) <= radius:
            return Quaternion(*(float(v) for v in c))


def halfspace_point(rng: np.random.Generator) -> Quaternion:
    c = rng.uniform(-0.6, 0.6, 4)
    c[0] += 1.0
    return Quaternion(*(float(v) for v in c))


def halfball_point(rng: np.random.Generator) -> Quaternion:
    """Ball-test components with a positive real part, kept inside ``|q| <= 0.9``."""
    while True:
        c = rng.uniform(-0.6, 0.6, 4)
        c[0] = abs(c[0])
        if c[0] > 0.05 and np.linalg.norm(c) <= 0.9:
            return Quaternion(*(float(v) for v in c))


def wedge_point(rng: np.random.Generator, n: int) -> Quaternion:
    lo = max(math.pi / 2 - math.pi / n, -math.pi / 2)
    hi = math.pi / 2
    pad = 0.05 * (hi - lo)
    theta = rng.uniform(lo + pad, hi - pad)
    rho = rng.uniform(0.3, 1.5)
    z = rho * cmath.exp(1j * theta)
    u = random_unit(rng)
    return Quaternion(z.real, 0.0, 0.0, 0.0) + u * z.imag


def _random_fraction_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(*(Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 7))) for _ in range(4)))


# suites ------------------------------------------------------------------------------


def suite_appell(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("appell")
    D = cfg.max_degree
    c.exact("T^k_j sums to 1", all(sum(appell_coefficient(k, j) for j in range(k + 1)) == 1 for k in range(D + 1)))
    c.exact("closed and Pochhammer coefficients agree", all(
        appell_coefficient(k, j) == appell_coefficient_pochhammer(k, j) for k in range(D + 1) for j in range(k + 1)))
    c.exact("Q_k from the Fueter image of q^(k+2)", all(appell_Q(k) == appell_Q_via_fueter(k) for k in range(D + 1)))
    c.exact("dirac Q_k = 0", all(not dirac_apply(appell_Q(k)) for k in range(D + 1)))
    c.exact("Euler operator: E Q_k = k Q_k", all(euler_apply(appell_Q(k)) == appell_Q(k) * k for k in range(D + 1)))
    c.exact("Appell property: dbar Q_k / 2 = k Q_(k-1)", all(
        dbar_apply(appell_Q(k)) * Fraction(1, 2) == appell_Q(k - 1) * k for k in range(1, D + 1)))
    c.exact("Q_k is homogeneous of degree k", all(appell_Q(k).is_homogeneous(k) for k in range(D + 1)))
    q = ball_point(rng)
    _, tail = regular_exp(q, cfg.truncation)
    # Exp(x) restricted to the reals is exp(x)
    c.close("regular exponential on the real axis", _d(regular_exp(Quaternion(0.4), cfg.truncation)[0],
                                                        Quaternion(math.exp(0.4))), 1e-13)
    c.close("regular exponential truncation bound", tail, 1e-12)
    return c.results


def suite_fueter_map(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("fueter-map")
    q = QQbarPoly.monomial
    c.exact("tau(q^2) = -4", laplacian_apply(q(2, 0)) == QQbarPoly.constant(-4))
    c.exact("tau(1) = tau(q) = 0", not laplacian_apply(q(0, 0)) and not laplacian_apply(q(1, 0)))
    c.exact("closed Fueter image of q^n matches the Laplacian, n <= 25",
            all(fueter_monomial(n) == laplacian_apply(q(n, 0)) for n in range(26)))
    c.exact("recursion tau(q^(n+1)) = 2 dirac q^n + q tau(q^n)",
            all(fueter_monomial(n + 1) == dirac_apply(q(n, 0)) * 2 + fueter_monomial(n).times_q()
                for n in range(1, 26)))
    c.exact("dbar tau(q^(k+2)) = 2(k+2) tau(q^(k+1)), k <= 20",
            all(dbar_apply(fueter_monomial(k + 2)) == fueter_monomial(k + 1) * (2 * (k + 2)) for k in range(21)))
    c.exact("tau(q^n) is Fueter regular", all(not dirac_apply(fueter_monomial(n)) for n in range(26)))
    worst = 0.0
    for n in range(2, 8):
        p = ball_point(rng)
        f = lambda x, n=n: x**n
        worst = max(worst, _rel(laplacian_fd(f, p, FD_STEP), fueter_monomial(n)(p)))
    c.close("finite-difference Laplacian of q^n, n < 8", worst, 1e-4)
    # Gaussian L^2 norm on R^4 against the growth bound 2n(n-1) sqrt((n-1)!)
    rule = r4_gauss(10)
    worst = -math.inf
    for n in range(2, 9):
        vals = T.point_values(fueter_monomial(n), rule.nodes)
        norm = math.sqrt(float(rule.integrate(np.sum(vals**2, axis=1))))
        worst = max(worst, norm - 2 * n * (n - 1) * math.sqrt(math.factorial(n - 1)))
    c.close("Gaussian R^4 norm of tau(q^n) below 2n(n-1)sqrt((n-1)!), n <= 8", max(worst, 0.0), 1e-6)
    return c.results


def suite_fock_kernel(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("fock-kernel")
    N, n = cfg.truncation, cfg.quad_order
    M = 10
    rule = slice_gauss(QI, n)
    powers = [SliceSeries(tuple([0] * m + [1])) for m in range(M + 1)]
    vals = [T.slice_values(p, rule.nodes, rule.unit) for p in powers]

    def gram(vs, r):
        G = np.zeros((M + 1, M + 1, 4))
        for a in range(M + 1):
            for b in range(M + 1):
                G[a, b] = r.integrate(qmul(qconj(vs[b]), vs[a]))
        return G

    G = gram(vals, rule)
    expected = np.zeros_like(G)
    for m in range(M + 1):
        expected[m, m, 0] = math.factorial(m)
    scale = np.maximum(1.0, expected[..., :1])
    c.close("Fock Gram <p^m, p^n> = m! delta, m,n <= 10", np.max(np.abs(G - expected) / scale), cfg.tol)
    worst = 0.0
    for _ in range(3):
        u = random_unit(rng)
        r2 = slice_gauss(u, n)
        G2 = gram([T.slice_values(p, r2.nodes, u) for p in powers], r2)
        worst = max(worst, np.max(np.abs(G2 - G) / scale))
    c.close("Fock Gram independent of the slice (3 random units)", worst, 1e-10)

    c.close("K(p, 0) = 1", _d(K.fock_kernel(ball_point(rng), Quaternion(0.0), N), Quaternion(1.0)), 1e-15)
    c.close("K(p, q) = exp(pq) for real p, q", _d(K.fock_kernel(Quaternion(0.7), Quaternion(-1.3), N),
                                                  Quaternion(math.exp(-0.91))), 1e-14)
    c.close("K(i, i) = e", _d(K.fock_kernel(QI, QI, N), Quaternion(math.e)), 1e-14)
    c.close("K_F(q, 0) = 0", abs(K.fock_fueter_kernel(ball_point(rng), Quaternion(0.0), N)), 1e-15)
    worst = 0.0
    for x in (-0.8, 0.3, 1.1):
        p = ball_point(rng, 1.0) * 2
        z, J = to_slice(p)
        ref = Quaternion.from_complex(-2 * z.conjugate() ** 2 * cmath.exp(x * z.conjugate()), J)
        worst = max(worst, _rel(K.fock_fueter_kernel(Quaternion(x), p, N), ref))
    c.close("K_F(x, p) = -2 pbar^2 exp(x pbar) for real x", worst, 1e-13)
    excess = -math.inf
    for _ in range(100):
        q, p = ball_point(rng) * 3, ball_point(rng) * 3
        bound = 2 * abs(p) ** 2 * math.exp(abs(q) * abs(p))
        excess = max(excess, abs(K.fock_fueter_kernel(q, p, N)) / bound - 1.0)
    c.close("|K_F(q,p)| <= 2|p|^2 exp(|qp|) at 100 points (excess ratio)", max(excess, 0.0), 0.0)
    worst = 0.0
    for _ in range(5):
        q, p = ball_point(rng), ball_point(rng) * 2
        worst = max(worst, abs(dirac_fd(lambda x: K.fock_fueter_kernel(x, p, N), q, FD_STEP)))
    c.close("K_F Fueter regular in q (finite differences)", worst, 1e-4)
    worst = 0.0
    for _ in range(5):
        q, p = ball_point(rng), ball_point(rng) * 2
        z, J = to_slice(p)
        g = lambda s, J=J: K.fock_fueter_kernel(q, Quaternion(s.w) + J * s.x, N)
        d0, d1, _, _ = partials_fd(g, Quaternion(z.real, z.imag, 0.0, 0.0), FD_STEP)
        worst = max(worst, abs(d1 + d0 * J))
    c.close("K_F anti-slice regular in p (Cauchy-Riemann residual)", worst, 1e-4)
    return c.results


def suite_transforms(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("transforms")
    n = cfg.quad_order
    gh = gauss_hermite(max(n, 21))
    xs = T.HermiteBasis(20).xi_scaled(gh.nodes)
    G = np.einsum("i,mi,ni->mn", gh.weights, xs, xs)
    c.close("Hermite functions orthonormal by Gauss-Hermite, n <= 20", np.max(np.abs(G - np.eye(21))), 1e-10)
    Hm = T.HermiteBasis(20).H(gh.nodes)
    norms = np.array([T.HermiteBasis.norm2(k) for k in range(21)])
    Gh = np.einsum("i,mi,ni->mn", gh.weights, Hm, Hm) / np.sqrt(np.outer(norms, norms))
    c.close("||h_n||^2 = 2^n n! sqrt(pi) from the raw recurrence", np.max(np.abs(Gh - np.eye(21))), 1e-10)

    q = Quaternion(0.5, 0.5, 0.0, 0.0)
    c.close("B(xi_0) = 1", _d(T.segal_bargmann([1], ball_point(rng), n), Quaternion(1.0)), 1e-10)
    c.close("B(xi_3)(1/2 + i/2) = q^3 / sqrt(6)", _d(T.segal_bargmann([0, 0, 0, 1], q, n), q**3 * (1 / math.sqrt(6))),
            1e-8)
    worst = 0.0
    for k in range(9):
        p = ball_point(rng)
        coeffs = [0] * k + [1]
        worst = max(worst, _d(T.segal_bargmann(coeffs, p, n), T.segal_bargmann_series(coeffs)(p)))
    c.close("B(xi_n) = q^n / sqrt(n!) by quadrature, n <= 8", worst, 1e-8)

    p = ball_point(rng)
    c.close("Fock-Fueter transform of p^2 is -4",
            _d(T.fock_fueter_transform(SliceSeries((0, 0, 1)), p, slice_gauss(QI, n)), Quaternion(-4.0)), 1e-8)
    c.close("Fock-Fueter transform of 1 is 0", abs(T.fock_fueter_transform(SliceSeries((1,)), p, slice_gauss(QI, n))),
            1e-10)
    f = SliceSeries(tuple(_random_fraction_quaternion(rng) for _ in range(7)))
    u = random_unit(rng)
    a = T.fock_fueter_transform(f, p, slice_gauss(QI, n))
    b = T.fock_fueter_transform(f, p, slice_gauss(u, n))
    c.close("Fock-Fueter transform independent of the slice", _d(a, b), 1e-10)
    c.close("Fock-Fueter transform equals the Fueter map", _rel(a, fueter_series(f)(p)), 1e-8)

    qh = Quaternion(0.0, 0.5, 0.0, 0.0)
    c.close("Phi(q,x): series and double quadrature agree at (i/2, 0.3)",
            _d(Quaternion(*T.phi_kernel(qh, 0.3)), T.phi_kernel_quadrature(qh, 0.3, QI, n, cfg.truncation)), 1e-7)
    worst = 0.0
    for _ in range(3):
        qq = ball_point(rng)
        x = float(rng.uniform(-1.5, 1.5))
        worst = max(worst, _d(Quaternion(*T.phi_kernel(qq, x)),
                              T.phi_kernel_quadrature(qq, x, random_unit(rng), n, cfg.truncation)))
    c.close("Phi(q,x): both routes agree at random points and slices", worst, 1e-7)
    c.close("Phi(0,x) = -pi^(-1/4) h_2(x)",
            _d(Quaternion(*T.phi_kernel(Quaternion(0.0), 0.7)),
               Quaternion(-T.PI_QUARTER * float(T.HermiteBasis(2).h(0.7)[2]))), 1e-14)

    worst = 0.0
    for _ in range(10):
        a_, b_ = ball_point(rng, 0.7), ball_point(rng, 0.7)
        worst = max(worst, _d(T.phi_gram(a_, b_, n), T.phi_gram_series(a_, b_)))
    c.close("int Phi(q,x) Phi(p,x) dx = 4 sum T_k(q) T_k(p), 10 pairs", worst, 1e-7)

    worst_quad = worst_comp = 0.0
    for k in range(9):
        p = ball_point(rng)
        coeffs = [0] * k + [1]
        ref = appell_T(k - 2)(p) * -2 if k >= 2 else Quaternion(0.0)
        worst_quad = max(worst_quad, _d(T.bargmann_fock_fueter_quadrature(coeffs, p, n), ref))
        comp = T.fock_fueter_transform(T.segal_bargmann_series(coeffs), p, slice_gauss(QI, n))
        worst_comp = max(worst_comp, _d(comp, ref))
    c.close("S(xi_n) = -2 T_(n-2) (0 for n <= 1) via int Phi xi_n, n <= 8", worst_quad, 1e-6)
    c.close("S(xi_n) = Fock-Fueter transform of B(xi_n), n <= 8", worst_comp, 1e-6)

    ok_iso = ok_bound = True
    for _ in range(5):
        phi = [Quaternion(0, 0, 0, 0)] * 2 + [_random_fraction_quaternion(rng) for _ in range(6)]
        psi = [Quaternion(0, 0, 0, 0)] * 2 + [_random_fraction_quaternion(rng) for _ in range(6)]
        lhs = T.coefficient_inner_product(T.bargmann_fock_fueter_coefficients(phi),
                                          T.bargmann_fock_fueter_coefficients(psi), "A_H", basis="T")
        ok_iso &= lhs == T.coefficient_inner_product(phi, psi, "L2_R") * 4
        gen = [_random_fraction_quaternion(rng) for _ in range(8)]
        ok_bound &= (T.coefficient_norm2(T.bargmann_fock_fueter_coefficients(gen), "A_H", basis="T")
                     <= 4 * T.coefficient_norm2(gen, "L2_R"))
    c.exact("<S phi, S psi> = 4 <phi, psi> on indices >= 2", ok_iso)
    c.exact("||S phi|| <= 2 ||phi|| for general phi", ok_bound)

    ok_rt = ok_47 = ok_68 = True
    for _ in range(5):
        f = SliceSeries(tuple(_random_fraction_quaternion(rng) for _ in range(10)))
        g = fueter_series(f)
        back = fueter_series_inverse(g)
        ok_rt &= back.coeffs[2:] == f.coeffs[2:] and fueter_series(back) == g
        ok_47 &= T.coefficient_norm2(g, "A_H") <= 4 * T.coefficient_norm2(f, "fock_slice")
        tail = sum((ck.norm2() * Fraction(1, k + 1) for k, ck in enumerate(f.coeffs) if k >= 2), Fraction(0))
        ok_68 &= T.coefficient_norm2(g, "B_B") == 4 * tail <= 4 * T.coefficient_norm2(f, "bergman_slice")
    c.exact("coefficient maps c <-> alpha round-trip", ok_rt)
    c.exact("Fock-Fueter norm <= 4 x slice Fock norm", ok_47)
    c.exact("Bergman-Fueter norm = 4 sum_(k>=2) |c_k|^2/(k+1) <= 4 x slice Bergman norm", ok_68)
    m = T.membership_check([1], "A_H")
    c.exact("membership: alpha = (1) has A_H norm^2 1/2", m.in_space and m.norm2 == Fraction(1, 2))
    return c.results


def suite_integral_reps(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("integral-reps")
    n = cfg.quad_order
    worst = 0.0
    for k in range(7):
        for x in (0.0, 0.7, -0.7):
            lhs = T.fock_moment(k, x, n)
            rhs = T.fock_moment_closed(k, x)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    c.close("int p^k |p|^4 exp(-|p|^2 + x pbar) = pi (k+1)(k+2) x^k, k <= 6", worst, 1e-6)
    for source in ("fock", "hermite", "bergman"):
        worst = 0.0
        for k in range(6):
            for _ in range(5):
                q = ball_point(rng)
                worst = max(worst, _d(T.integral_representation_Q(k, q, source, n, cfg.truncation), appell_eval(k, q)))
        c.close(f"Q_k from the {source} integral representation, k <= 5", worst, 1e-6)
    return c.results


def _fd_laplacian_worst(slice_kernel, bf_kernel, points) -> float:
    worst = 0.0
    for q, r in points:
        lap = laplacian_fd(lambda x: slice_kernel(x, r), q, FD_STEP)
        worst = max(worst, _rel(lap, bf_kernel(q, r)))
    return worst


def _fueter_worst(bf_kernel, points) -> float:
    worst = 0.0
    for q, r in points:
        ref = max(1.0, abs(bf_kernel(q, r)))
        worst = max(worst, abs(dirac_fd(lambda x: bf_kernel(x, r), q, FD_STEP)) / ref)
    return worst


def suite_bergman_ball(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("bergman-ball")
    N, n = cfg.truncation, cfg.quad_order
    M = 10
    rule = disk_rule(QI, max(n // 2, 1), n)

    def gram(r):
        G = np.zeros((M + 1, M + 1), dtype=complex)
        for a in range(M + 1):
            for b in range(M + 1):
                G[a, b] = np.sum(r.weights * r.nodes**a * np.conj(r.nodes) ** b)
        return G

    G = gram(rule)
    c.close("slice Gram <q^m, q^n> = delta/(m+1), m,n <= 10",
            np.max(np.abs(G - np.diag([1 / (m + 1) for m in range(M + 1)]))), cfg.tol)
    powers = [SliceSeries(tuple([0] * m + [1])) for m in range(4)]
    worst = 0.0
    for _ in range(3):
        u = random_unit(rng)
        r2 = disk_rule(u, max(n // 2, 1), n)
        for a in range(4):
            for b in range(4):
                val = T.quadrature_inner_product(powers[a], powers[b], "bergman_slice", r2)
                worst = max(worst, _d(val, Quaternion(G[a, b].real)))
    c.close("slice Gram independent of the slice (3 random units)", worst, 1e-10)

    pairs = [(ball_point(rng), ball_point(rng)) for _ in range(20)]
    c.close("series = closed form, |q|,|r| <= 0.6",
            max(_d(K.bergman_ball(q, r, 200, "series"), K.bergman_ball(q, r)) for q, r in pairs), 1e-10)
    c.close("K(0, r) = 1", _d(K.bergman_ball(Quaternion(0.0), pairs[0][1]), Quaternion(1.0)), 1e-15)
    c.close("real q, r: (1 - qr)^(-2)",
            _d(K.bergman_ball(Quaternion(0.3), Quaternion(-0.7)), Quaternion((1 + 0.21) ** -2)), 1e-14)
    c.close("Hermitian: conj K(q,r) = K(r,q)",
            max(_d(K.bergman_ball(q, r).conj(), K.bergman_ball(r, q)) for q, r in pairs), 1e-13)
    c.close("Bergman-Fueter series = closed form",
            max(_d(K.bergman_fueter_ball(q, r, N, "series"), K.bergman_fueter_ball(q, r)) for q, r in pairs), 1e-10)
    r = pairs[0][1]
    c.close("K_BF(0, r) = -12 rbar^2", _d(K.bergman_fueter_ball(Quaternion(0.0), r), r.conj() ** 2 * -12.0), 1e-13)
    c.close("real q, r: K_BF = -12 r^2 (1 - qr)^(-4)",
            _d(K.bergman_fueter_ball(Quaternion(0.3), Quaternion(-0.5)), Quaternion(-12 * 0.25 * 1.15**-4)), 1e-13)
    c.close("finite-difference Laplacian of K matches K_BF (20 points)",
            _fd_laplacian_worst(K.bergman_ball, K.bergman_fueter_ball, pairs), 1e-4)
    c.close("K_BF Fueter regular in q", _fueter_worst(K.bergman_fueter_ball, pairs[:5]), 1e-4)
    return c.results


def suite_bergman_halfspace(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("bergman-halfspace")
    pairs = [(halfspace_point(rng), halfspace_point(rng)) for _ in range(20)]
    worst = 0.0
    for q, r in pairs:
        u = random_unit(rng)
        z, w = to_slice(q)[0], to_slice(r)[0]
        qs, rs = Quaternion(z.real) + u * z.imag, Quaternion(w.real) + u * w.imag
        ref = Quaternion.from_complex(1 / (math.pi * (z + w.conjugate()) ** 2), u)
        worst = max(worst, _d(K.bergman_halfspace(qs, rs), ref))
    c.close("same slice: (1/pi)(z + wbar)^(-2)", worst, 1e-13)
    one = Quaternion(1.0)
    c.close("K(1, 1) = 1/(4 pi)", _d(K.bergman_halfspace(one, one), Quaternion(1 / (4 * math.pi))), 1e-15)
    c.close("Hermitian: conj K(q,r) = K(r,q) (20 pairs)",
            max(_d(K.bergman_halfspace(q, r).conj(), K.bergman_halfspace(r, q)) for q, r in pairs), 1e-13)
    c.close("finite-difference Laplacian of K matches K_BF (20 points)",
            _fd_laplacian_worst(K.bergman_halfspace, K.bergman_fueter_halfspace, pairs), 1e-4)
    c.close("K_BF Fueter regular in q", _fueter_worst(K.bergman_fueter_halfspace, pairs[:5]), 1e-4)
    P, Kv = 0.25, 1 / (4 * math.pi)
    c.close("K_BF(1, 1) = -4 (P + 2K) P / pi",
            _d(K.bergman_fueter_halfspace(one, one), Quaternion(-4 * (P + 2 * Kv * math.pi) * P / math.pi)), 1e-14)
    return c.results


def suite_bergman_halfball(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("bergman-halfball")
    pairs = [(halfball_point(rng), halfball_point(rng)) for _ in range(50)]
    c.close("ball + half-space kernel = representation-formula extension (50 pairs)",
            max(_d(K.bergman_halfball(q, r), K.bergman_halfball(q, r, form="extension")) for q, r in pairs), 1e-10)
    half = Quaternion(0.5)
    c.close("K(1/2, 1/2) = 16/9 + 1", _d(K.bergman_halfball(half, half), Quaternion(16 / 9 + 1)), 1e-14)
    c.exact("Bergman-Fueter kernel is the sum of its parts", all(
        K.bergman_fueter_halfball(q, r)
        == K.bergman_fueter_ball(q, r) + K.bergman_fueter_halfspace(q, r, measure="normalized")
        for q, r in pairs[:20]))
    c.close("finite-difference Laplacian of K matches K_BF (20 points)",
            _fd_laplacian_worst(K.bergman_halfball, K.bergman_fueter_halfball, pairs[:20]), 1e-4)
    c.close("K_BF Fueter regular in q", _fueter_worst(K.bergman_fueter_halfball, pairs[:5]), 1e-4)
    rule = half_disk_rule(QI, 40, 80)
    z = 0.5 + 0.2j
    kern = np.array([K.halfdisk_complex_kernel(z, w) for w in rule.nodes])
    worst = max(abs(np.sum(rule.weights * kern * f(rule.nodes)) - f(z)) for f in (lambda t: t**2, np.exp))
    c.close("planar half-disk kernel reproduces under dA/pi", worst, 1e-10)
    try:
        K.bergman_fueter_halfball(Quaternion(0.0), pairs[0][1])
        rejected = False
    except K.DomainError:
        rejected = True
    c.exact("q = 0 rejected (outside the half ball)", rejected)
    return c.results


def suite_wedge(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("wedge")
    for n in (1, 2, 3):
        worst_slice = worst_ext = 0.0
        for _ in range(10):
            q, r = wedge_point(rng, n), wedge_point(rng, n)
            u = random_unit(rng)
            z, w = to_slice(q)[0], to_slice(r)[0]
            qs, rs = Quaternion(z.real) + u * z.imag, Quaternion(w.real) + u * w.imag
            ref = Quaternion.from_complex(K.wedge_complex_kernel(z, w, n), u)
            worst_slice = max(worst_slice, _rel(K.bergman_wedge(qs, rs, n), ref))
            worst_ext = max(worst_ext, _rel(K.bergman_wedge(q, r, n), K.bergman_wedge(q, r, n, form="extension")))
        c.close(f"n={n}: slice restriction = planar wedge kernel", worst_slice, 1e-12)
        c.close(f"n={n}: closed form = representation-formula extension", worst_ext, 1e-10)
        x = Quaternion(1.0) if n == 1 else wedge_point(rng, n)
        if n % 2:
            c.exact(f"n={n}: positive on the diagonal", K.bergman_wedge(x, x, n).w > 0)
        else:
            # the extension has a pole at r = q for even n, so test the planar kernel
            z = to_slice(x)[0]
            c.exact(f"n={n}: planar kernel positive on the diagonal", K.wedge_complex_kernel(z, z, n).real > 0)
    worst = 0.0
    for _ in range(20):
        q, r = halfspace_point(rng), halfspace_point(rng)
        worst = max(worst, _d(K.bergman_wedge(q, r, 1), K.bergman_halfspace(q, r) * math.pi))
    c.close("n=1 equals pi x half-space kernel (20 pairs)", worst, 1e-12)
    return c.results


def suite_generating_function(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("generating-function")
    worst = 0.0
    for _ in range(50):
        q, r = ball_point(rng), ball_point(rng)
        worst = max(worst, _d(K.generating_series(q, r, cfg.truncation), K.generating_closed(q, r)))
    c.close("sum (k+1)(k+2)(k+3) Q_k(q) rbar^k = 2R^2 + 4 K R (50 pairs)", worst, 1e-9)
    worst = 0.0
    for _ in range(20):
        qr = float(rng.uniform(-0.6, 0.6)) * float(rng.uniform(-0.6, 0.6))
        k = np.arange(cfg.truncation + 1)
        lhs = float(np.sum((k + 1) * (k + 2) * (k + 3) / 6 * qr**k))
        worst = max(worst, abs(lhs - (1 - qr) ** -4))
    c.close("real axis: sum (k+1)(k+2)(k+3)/6 (qr)^k = (1 - qr)^(-4)", worst, 1e-10)
    return c.results


def suite_rkhs(cfg: RunConfig, rng) -> List[CheckResult]:
    c = _Checks("rkhs")
    N, D = cfg.truncation, cfg.max_degree
    c.close("G(0, q) = 2", _d(K.rkhs_G(Quaternion(0.0), ball_point(rng), N), Quaternion(2.0)), 1e-14)
    pairs = [(ball_point(rng), ball_point(rng)) for _ in range(10)]
    c.close("conj G(p,q) = G(q,p)", max(_d(K.rkhs_G(p, q, N).conj(), K.rkhs_G(q, p, N)) for p, q in pairs), 1e-13)
    c.exact("G(q,q) real and non-negative", all(
        abs(K.rkhs_G(q, q, N).vector) < 1e-13 and K.rkhs_G(q, q, N).w >= 0 for q, _ in pairs))
    worst_self = worst_eval = 0.0
    ok_bound = True
    for q, q2 in pairs:
        Gq, Gq2 = T.rkhs_G_coefficients(q, D), T.rkhs_G_coefficients(q2, D)
        worst_self = max(worst_self, _d(T.coefficient_inner_product(Gq2, Gq, "A_H"), K.rkhs_G(q, q2, N)))
        f = RegularSeries(tuple(_random_fraction_quaternion(rng).to_float() for _ in range(8)))
        fq = f(q)
        worst_eval = max(worst_eval, _d(T.coefficient_inner_product(f, Gq, "A_H"), fq))
        bound = math.sqrt(K.rkhs_G(q, q, N).w * T.coefficient_norm2(f, "A_H"))
        ok_bound &= abs(fq) <= bound * (1 + 1e-12)
    c.close("<G_q', G_q> = G(q, q')", worst_self, 1e-12)
    c.close("<f, G_q> = f(q)", worst_eval, 1e-12)
    c.exact("|f(q)| <= ||G_q|| ||f||", ok_bound)
    c.exact("<Q_m, Q_n> = delta m!/((m+1)(m+2)) in A_H", all(
        T.coefficient_inner_product([0] * m + [1], [0] * k + [1], "A_H")
        == Quaternion((Fraction(math.factorial(m), (m + 1) * (m + 2)) if m == k else 0))
        for m in range(8) for k in range(8)))
    c.close("L(0, r) = 12", _d(K.rkhs_L(Quaternion(0.0), ball_point(rng), N), Quaternion(12.0)), 1e-13)
    t = 0.3 * -0.45
    k = np.arange(N + 1)
    direct = float(np.sum((k + 1.0) ** 2 * (k + 2) ** 2 * (k + 3) * t**k))
    c.close("real q, r: direct scalar sum", _rel(K.rkhs_L(Quaternion(0.3), Quaternion(-0.45), N), Quaternion(direct)),
            1e-13)
    worst = 0.0
    for p, _ in pairs:
        f = RegularSeries(tuple(_random_fraction_quaternion(rng).to_float() for _ in range(8)))
        worst = max(worst, _d(T.coefficient_inner_product(f, T.rkhs_L_coefficients(p, D), "B_B"), f(p)))
    c.close("<f, L_p> = f(p) in B_B", worst, 1e-12)
    worst = 0.0
    for p, r in pairs:
        worst = max(worst, _d(T.rkhs_L_coefficients(r, N)(p), K.rkhs_L(p, r, N)))
    c.close("L_r(q) from its coefficients = L(q, r)", worst, 1e-10)
    return c.results


SUITES: Dict[str, Callable[[RunConfig, np.random.Generator], List[CheckResult]]] = {
    "appell": suite_appell,
    "fueter-map": suite_fueter_map,
    "fock-kernel": suite_fock_kernel,
    "transforms": suite_transforms,
    "integral-reps": suite_integral_reps,
    "bergman-ball": suite_bergman_ball,
    "bergman-halfspace": suite_bergman_halfspace,
    "bergman-halfball": suite_bergman_halfball,
    "wedge": suite_wedge,
    "generating-function": suite_generating_function,
    "rkhs": suite_rkhs,
}


def run_suite(name: str, cfg: RunConfig) -> List[CheckResult]:
    # each suite gets its own stream so results do not depend on which suites ran before
    rng = np.random.default_rng([cfg.seed, SUITE_NAMES.index(name)])
    return SUITES[name](cfg, rng)


def run(cfg: RunConfig) -> List[CheckResult]:
    names = SUITE_NAMES if cfg.suite == "all" else (cfg.suite,)
    out: List[CheckResult] = []
    for name in names:
        out.extend(run_suite(name, cfg))
    return out
