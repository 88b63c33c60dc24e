import math

import mpmath
import numpy as np
import pytest
import scipy.special as sp
from hypothesis import given, settings, strategies as st

from genvirial.errors import DomainError
from genvirial.specfun import (
    AngularIndexSet,
    airy,
    airy_zero,
    assoc_gegenbauer,
    gegenbauer,
    hermite,
    hermite_function,
    lambda_of,
    laguerre,
    omega,
    omega_norm,
    sphere_integral,
    spherical_to_cartesian,
)


def test_hermite_values():
    assert hermite(0, 0.7) == 1.0
    assert hermite(3, 1.0) == -4.0
    x = np.linspace(-2, 2, 9)
    explicit = [1 + 0 * x, 2 * x, 4 * x ** 2 - 2, 8 * x ** 3 - 12 * x, 16 * x ** 4 - 48 * x ** 2 + 12]
    for n, ref in enumerate(explicit):
        np.testing.assert_allclose(hermite(n, x), ref, rtol=0, atol=1e-12)


def test_hermite_small_argument_limit():
    # H_(2n+1)(rho) / rho -> (-1)^n (2n+2)! / (n+1)!
    for n in range(4):
        ref = (-1) ** n * math.factorial(2 * n + 2) / math.factorial(n + 1)
        assert hermite(2 * n + 1, 1e-8) / 1e-8 == pytest.approx(ref, rel=1e-12)
    assert hermite(3, 1e-8) / 1e-8 == pytest.approx(-12.0, rel=1e-12)


def test_hermite_functions_orthonormal():
    x = np.linspace(-12, 12, 4801)
    phi = np.array([hermite_function(n, x) for n in range(8)])
    gram = phi @ phi.T * (x[1] - x[0])
    np.testing.assert_allclose(gram, np.eye(8), atol=1e-12)


def test_airy_reference_values():
    ai0, aip0 = airy(0.0)
    assert ai0 == pytest.approx(3 ** (-2 / 3) / math.gamma(2 / 3), rel=1e-14)
    assert ai0 == pytest.approx(0.3550280538, abs=1e-10)
    assert aip0 == pytest.approx(-(3 ** (-1 / 3)) / math.gamma(1 / 3), rel=1e-14)
    assert airy(10.0)[0] < 1e-9


def test_airy_against_scipy_oracle():
    x = np.linspace(-20, 20, 801)
    ai, aip = airy(x)
    ref = sp.airy(x)
    scale = np.maximum(1.0, np.abs(x) ** 0.25)
    assert np.max(np.abs(ai - ref[0]) / scale) < 1e-12
    assert np.max(np.abs(aip - ref[1]) / scale ** 2) < 1e-11


def test_airy_ode_residual():
    x, d = 1.0, 1e-4
    second = (airy(x + d)[0] - 2 * airy(x)[0] + airy(x - d)[0]) / d ** 2
    assert abs(second - x * airy(x)[0]) < 1e-8
    # Ai' is exact, so Ai'' = x Ai can be checked through it on a grid
    xs = np.linspace(-15, 6, 200)
    fd = (airy(xs + 1e-6)[1] - airy(xs - 1e-6)[1]) / 2e-6
    assert np.max(np.abs(fd - xs * airy(xs)[0])) < 1e-7


def test_airy_zeros():
    assert airy_zero(1) == pytest.approx(-2.3381074105, abs=1e-10)
    assert airy_zero(2) == pytest.approx(-4.0879494441, abs=1e-10)
    zeros = [airy_zero(k) for k in range(1, 12)]
    assert all(b < a < 0 for a, b in zip(zeros, zeros[1:]))
    # scipy's ai_zeros carries an 8e-12 error at k = 5, so mpmath is the oracle
    ref = [float(mpmath.airyaizero(k)) for k in range(1, 12)]
    np.testing.assert_allclose(zeros, ref, rtol=0, atol=1e-13)
    assert max(abs(airy(z)[0]) for z in zeros) < 1e-10
    with pytest.raises(DomainError):
        airy_zero(0)


def test_laguerre_values():
    assert laguerre(0, 0.3, 1.7) == 1.0
    assert laguerre(1, 1.0, 2.0) == 0.0
    assert laguerre(2, 0.0, 0.0) == 1.0
    x = np.linspace(0, 10, 11)
    np.testing.assert_allclose(laguerre(4, 2.5, x), sp.eval_genlaguerre(4, 2.5, x), rtol=1e-12)


def test_gegenbauer_values():
    assert gegenbauer(0, 1.5, 0.3) == 1.0
    assert gegenbauer(1, 1.5, 0.3) == pytest.approx(0.9, abs=1e-15)
    assert gegenbauer(2, 0.5, 1.0) == pytest.approx(1.0, abs=1e-15)
    z = np.linspace(-1, 1, 21)
    np.testing.assert_allclose(gegenbauer(5, 2.0, z), sp.eval_gegenbauer(5, 2.0, z), atol=1e-12)
    with pytest.raises(DomainError):
        gegenbauer(2, 1.0, 1.5)
    with pytest.raises(DomainError):
        gegenbauer(2, 0.0, 0.5)


def test_assoc_gegenbauer_examples():
    z = np.linspace(-0.9, 0.9, 7)
    np.testing.assert_allclose(assoc_gegenbauer(4, 0, 3, z), gegenbauer(4, 1.5, z))
    assert assoc_gegenbauer(1, 1, 1, 0.0) == pytest.approx(-1.0)
    assert assoc_gegenbauer(2, 3, 2, 0.4) == 0.0
    # j = 1 is the associated Legendre function, Condon-Shortley phase included
    for l in range(5):
        for m in range(l + 1):
            np.testing.assert_allclose(assoc_gegenbauer(l, m, 1, z), sp.lpmv(m, l, z), atol=1e-12)


def _g1_residual(l, m, j, z, d=1e-3):
    f = lambda x: assoc_gegenbauer(l, m, j, x)
    f0, fp, fm, fp2, fm2 = f(z), f(z + d), f(z - d), f(z + 2 * d), f(z - 2 * d)
    d1 = (8 * (fp - fm) - (fp2 - fm2)) / (12 * d)
    d2 = (16 * (fp + fm) - (fp2 + fm2) - 30 * f0) / (12 * d * d)
    lhs = -(1 - z * z) * d2 + (j + 1) * z * d1 + m * (m + j - 1) / (1 - z * z) * f0
    return abs(lhs - l * (l + j) * f0) / max(1.0, abs(l * (l + j) * f0))


def test_assoc_gegenbauer_ode_example():
    assert _g1_residual(3, 1, 2, 0.3) < 1e-6


@settings(max_examples=60, deadline=None)
@given(l=st.integers(0, 8), j=st.integers(1, 5), z=st.floats(-0.95, 0.95), data=st.data())
def test_assoc_gegenbauer_ode_property(l, j, z, data):
    m = data.draw(st.integers(0, l))
    assert _g1_residual(l, m, j, z) < 1e-6


@settings(max_examples=40, deadline=None)
@given(l=st.integers(1, 8), j=st.integers(1, 5), z=st.floats(-0.9, 0.9))
def test_assoc_gegenbauer_m1_is_scaled_derivative(l, j, z):
    d = 1e-5
    deriv = (gegenbauer(l, j / 2, z + d) - gegenbauer(l, j / 2, z - d)) / (2 * d)
    ref = -math.sqrt(1 - z * z) * deriv
    assert assoc_gegenbauer(l, 1, j, z) == pytest.approx(ref, rel=1e-5, abs=1e-5)


def test_angular_index_validation():
    assert AngularIndexSet(4, (2, 1, -1)).l1 == 2
    assert lambda_of(AngularIndexSet(4, (1, 0, 0))) == 3
    for bad in [(1, 2, 0), (1, -1, 0), (0, 0, 1)]:
        with pytest.raises(DomainError):
            AngularIndexSet(4, bad)
    with pytest.raises(DomainError):
        AngularIndexSet(4, (1, 0))
    with pytest.raises(DomainError):
        omega(3, AngularIndexSet(4, (0, 0, 0)), [0.1, 0.2, 0.3])


def test_omega_normalized_examples():
    th = [np.array(0.0), np.array(0.8), np.array(1.1)]
    assert abs(omega(4, AngularIndexSet(4, (0, 0, 0)), th, normalize=True)) == pytest.approx(1 / (math.pi * math.sqrt(2)), rel=1e-12)
    assert abs(omega(4, AngularIndexSet(4, (1, 0, 0)), th, normalize=True)) == pytest.approx(math.sqrt(2) / math.pi, rel=1e-12)
    # three dimensions: (1, 0) follows cos(theta_1)
    vals = [abs(omega(3, AngularIndexSet(3, (1, 0)), [np.array(t), np.array(0.4)])) for t in (0.2, 0.9)]
    assert vals[0] / vals[1] == pytest.approx(math.cos(0.2) / math.cos(0.9), rel=1e-12)


def test_product_forms_orthonormal_on_three_sphere():
    keys = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 1, -1), (2, 1, 0), (2, 2, -2)]
    idx = [AngularIndexSet(4, k) for k in keys]
    norms = [omega_norm(i) for i in idx]
    for a, na in zip(idx, norms):
        for b, nb in zip(idx, norms):
            val = sphere_integral(4, lambda t: na * omega(4, a, t) * np.conj(nb * omega(4, b, t)))
            assert abs(val - (a == b)) < 1e-10


def test_sphere_integral_cap():
    with pytest.raises(DomainError):
        sphere_integral(7, lambda t: 1.0)


def test_spherical_to_cartesian_examples():
    np.testing.assert_allclose(spherical_to_cartesian(3, 1.0, [math.pi / 2, 0.0]), [0, 1, 0], atol=1e-15)
    np.testing.assert_allclose(spherical_to_cartesian(4, 2.0, [0.0, 0.3, 1.2]), [2, 0, 0, 0], atol=1e-15)
    with pytest.raises(DomainError):
        spherical_to_cartesian(3, 1.0, [0.1])


@settings(max_examples=50, deadline=None)
@given(N=st.integers(2, 7), r=st.floats(0.01, 100.0), data=st.data())
def test_spherical_to_cartesian_preserves_radius(N, r, data):
    theta = data.draw(st.lists(st.floats(0, 2 * math.pi), min_size=N - 1, max_size=N - 1))
    x = spherical_to_cartesian(N, r, theta)
    assert float(np.sum(x * x)) == pytest.approx(r * r, rel=1e-12)
