import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genvirial.errors import DomainError
from genvirial.quadrature import integrate, reduced_alpha


def _grid(h, rho_max):
    return h * np.arange(1, int(round(rho_max / h)) + 1)


@pytest.mark.parametrize("alpha,coefs", [
    (0.5, (1, -1, 0.5, 0.2)),
    (-0.5, (1, -1, 0.5, 0.2)),
    # integer powers fall through to Simpson beyond the head: cubic overall
    (0.0, (1, -1, 0.5, 0.2)),
    (1.0, (1, -1, 0.5)),
    (3.0, (1,)),
])
def test_power_times_polynomial_is_exact(alpha, coefs):
    rho = _grid(0.01, 2.0)
    vals = rho ** alpha * sum(c * rho ** k for k, c in enumerate(coefs))
    exact = sum(c * 2.0 ** (alpha + k + 1) / (alpha + k + 1) for k, c in enumerate(coefs))
    assert integrate(vals, 0.01, alpha) == pytest.approx(exact, rel=1e-13)


@settings(max_examples=40, deadline=None)
@given(alpha=st.floats(-0.95, 4.0))
def test_gamma_integrals(alpha):
    rho = _grid(1e-3, 60.0)
    val = integrate(rho ** alpha * np.exp(-rho), 1e-3, alpha)
    assert val == pytest.approx(math.gamma(alpha + 1), rel=2e-10)


def test_error_estimate_shrinks_with_h():
    errs = []
    for h in (1e-2, 5e-3):
        rho = _grid(h, 30.0)
        errs.append(integrate(np.exp(-rho) * np.sin(rho), h, 0.0, with_error=True)[1])
    assert errs[1] < errs[0]


def test_rejects_nonintegrable_and_short():
    with pytest.raises(DomainError):
        integrate(np.ones(100), 0.1, -1.0)
    with pytest.raises(DomainError):
        integrate(np.ones(7), 0.1, 0.0)


@pytest.mark.parametrize("M", [6000, 6001])
def test_odd_and_even_node_counts(M):
    rho = 1e-3 * np.arange(1, M + 1)
    val = integrate(rho ** 1.5 * np.exp(-rho ** 2), 1e-3, 1.5)
    assert val == pytest.approx(0.5 * math.gamma(1.25), rel=1e-12)


def test_reduced_alpha():
    assert reduced_alpha(3.0) == 0.0
    assert reduced_alpha(2.5) == 0.5
    assert reduced_alpha(-0.5) == -0.5
