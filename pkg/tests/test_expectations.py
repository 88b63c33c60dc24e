import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genvirial.errors import ConvergenceError, DomainError, UnsupportedOrderError
from genvirial.expectations import (
    Moment,
    expect,
    expect_power,
    kinetic_moment,
    kinetic_moment_direct,
    mehler_check,
    mehler_diagonal,
)
from genvirial.potentials import make_custom, make_power_law
from genvirial.quadrature import integrate
from genvirial.radial import exact_coulomb, exact_linear_l0, exact_oscillator_l0
from genvirial.relations import oscillator_v_chain

from conftest import state


def test_expect_examples():
    s = state("oscillator", 0)
    assert expect(s, lambda r: np.ones_like(r), 0.0, "1").value == pytest.approx(1.0, abs=1e-12)
    assert expect(s, lambda r: r ** 2, 2.0).value == pytest.approx(1.5, abs=1e-10)
    assert expect(state("coulomb", 0), lambda r: r, 1.0).value == pytest.approx(1.5, abs=1e-10)


def test_expect_power_examples():
    assert expect_power(state("oscillator", 0), 4).value == pytest.approx(3.75, abs=1e-10)
    assert expect_power(state("coulomb", 0), -2).value == pytest.approx(2.0, abs=1e-9)
    lin = state("linear", 0)
    assert expect_power(lin, 1).value == pytest.approx(4 * lin.eps / 3, abs=1e-10)
    assert expect_power(lin, 1).value == pytest.approx(1.558739, abs=1e-6)


def test_moment_serialization():
    m = expect_power(state("oscillator", 0), 2)
    assert isinstance(m, Moment) and float(m) == m.value
    d = m.to_dict()
    assert set(d) == {"state", "observable", "value", "err"}
    assert 0 <= m.err < 1e-5


def test_divergent_moments_are_refused():
    s = state("coulomb", 0)
    with pytest.raises(DomainError, match="rho\\^-1"):
        expect_power(s, -3)
    with pytest.raises(DomainError):
        expect(s, lambda r: r ** -4, -4.0)
    # l = 1 makes rho^-3 integrable
    assert expect_power(state("coulomb", 0, 1), -3).value > 0


def test_kinetic_moment_examples():
    s = state("oscillator", 0)
    assert kinetic_moment(s, order=1).value == pytest.approx(0.75, abs=1e-10)
    assert kinetic_moment(s, order=2).value == pytest.approx(0.9375, abs=1e-10)
    assert kinetic_moment(s, order=3).value == pytest.approx(1.640625, abs=1e-10)
    assert kinetic_moment(s, order=4).value == pytest.approx(3.69140625, abs=1e-9)


@pytest.mark.parametrize("n,l", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 2)])
def test_oscillator_kinetic_equals_potential_moments(n, l):
    s = state("oscillator", n, l)
    chain = oscillator_v_chain(s.eps, l, 4)
    for k in range(1, 5):
        assert kinetic_moment(s, order=k).value == pytest.approx(chain[k], rel=1e-8)


@pytest.mark.parametrize("kind,n,l", [("oscillator", 1, 1), ("linear", 0, 0), ("linear", 1, 2),
                                      ("coulomb", 0, 2), ("coulomb", 1, 0)])
def test_kinetic_moments_against_operator_form(kind, n, l):
    s = state(kind, n, l)
    orders = [1, 2, 3, 4]
    if kind == "coulomb":
        orders = [1, 2] if l == 0 else ([1, 2, 3, 4] if l >= 2 else [1, 2, 3])
    for k in orders:
        a = kinetic_moment(s, order=k).value
        b = kinetic_moment_direct(s, k).value
        assert a == pytest.approx(b, rel=1e-7)


def test_kinetic_moment_virial_form_on_exact_states():
    # <T> against -1/2 int R R'' + centrifugal piece, integrated by parts
    for s in (exact_oscillator_l0(1), exact_linear_l0(2), exact_coulomb(3, 1)):
        direct = 0.5 * integrate(s.Rdot ** 2, s.h, 0.0) + 0.5 * s.dim.centrifugal * integrate(s.P / s.rho ** 2, s.h, 2 * s.l)
        assert kinetic_moment(s, order=1).value == pytest.approx(direct, abs=1e-6)


def test_kinetic_moment_errors():
    s = state("oscillator", 0)
    with pytest.raises(UnsupportedOrderError):
        kinetic_moment(s, order=5)
    with pytest.raises(UnsupportedOrderError):
        kinetic_moment_direct(s, 0)
    no_third = make_custom(lambda r: r ** 2 / 2, lambda r: r, lambda r: 1 + 0 * r)
    with pytest.raises(UnsupportedOrderError):
        kinetic_moment(s, no_third, order=4)
    assert kinetic_moment(s, no_third, order=3).value == pytest.approx(1.640625, abs=1e-9)
    with pytest.raises(DomainError):
        kinetic_moment(state("oscillator", 0, 0, 5), order=1)
    with pytest.raises(DomainError):
        kinetic_moment(state("coulomb", 0, 0), order=3)


def test_mehler_examples():
    assert mehler_diagonal(0) == 2.0
    assert mehler_diagonal(1) == 72.0
    series, closed = mehler_check(1.0, 0.3, 20)
    assert closed == pytest.approx(0.3 / 0.91 ** 1.5, rel=1e-14)
    assert closed == pytest.approx(0.3455884077105, abs=1e-12)
    assert series == pytest.approx(closed, abs=1e-8)
    s0, c0 = mehler_check(1.0, 1e-9, 3)
    assert abs(s0) < 2e-9 and abs(c0) < 2e-9
    # n = 0 term alone carries coefficient 1
    s1, _ = mehler_check(1.0, 1e-4, 0)
    assert s1 == pytest.approx(1e-4, rel=1e-10)


@pytest.mark.parametrize("k", [1.0, 1.5, 2.0, 3.0])
def test_mehler_other_k(k):
    series, closed = mehler_check(k, 0.2, 30)
    assert series == pytest.approx(closed, rel=1e-9)


def test_mehler_errors():
    with pytest.raises(DomainError):
        mehler_check(1.0, 1.0, 5)
    with pytest.raises(DomainError):
        mehler_check(0.0, 0.3, 5)
    with pytest.raises(DomainError):
        mehler_check(1.0, 0.3, -1)


@settings(max_examples=30, deadline=None)
@given(j=st.floats(0.5, 7.0), which=st.sampled_from([("oscillator", 1, 0), ("linear", 0, 1), ("coulomb", 1, 1)]))
def test_moments_are_log_convex(j, which):
    s = state(*which)
    lo, mid, hi = (expect_power(s, x).value for x in (j - 1, j, j + 1))
    assert mid * mid <= lo * hi * (1 + 1e-12)


@settings(max_examples=20, deadline=None)
@given(a=st.floats(-3, 3), b=st.floats(-3, 3))
def test_expect_is_linear(a, b):
    s = state("linear", 1)
    lhs = expect(s, lambda r: a * r + b * r ** 2, 1.0).value
    rhs = a * expect_power(s, 1).value + b * expect_power(s, 2).value
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)
