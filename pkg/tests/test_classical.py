import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genvirial.classical import (
    classical_virial_residual,
    find_turning_points,
    make_orbit,
    period_average,
    quantum_classical_gap,
)
from genvirial.errors import DomainError, NoOrbitError
from genvirial.potentials import make_coulomb, make_power_law
from genvirial.relations import ProbeFunction

from conftest import state

KEPLER = make_coulomb(1.0)
OSC = make_power_law(1, 2)
LIN = make_power_law(1, 1)


def test_kepler_turning_points():
    r_min, r_max = find_turning_points(KEPLER, -0.5, 0.5)[:2]
    assert r_min == pytest.approx(1 - 1 / math.sqrt(2), rel=1e-12)
    assert r_max == pytest.approx(1 + 1 / math.sqrt(2), rel=1e-12)


def test_kepler_period_and_kinetic_average():
    for l2 in (0.0, 0.25, 0.5, 0.9):
        orbit = make_orbit(KEPLER, -0.5, l2)
        assert orbit.period == pytest.approx(2 * math.pi, rel=1e-9)
        assert period_average(orbit, lambda r: -0.5 - KEPLER.v(r)) == pytest.approx(0.5, abs=1e-9)
        assert period_average(orbit, lambda r: np.ones_like(r)) == pytest.approx(1.0, abs=1e-12)


def test_circular_orbit():
    orbit = make_orbit(KEPLER, -0.5, 1.0)
    assert orbit.circular
    assert orbit.r_min == pytest.approx(1.0, abs=1e-6) and orbit.r_max == pytest.approx(1.0, abs=1e-6)
    assert classical_virial_residual(orbit, ProbeFunction.power(2)).lhs == 0.0


def test_oscillator_radial_period():
    # the radial motion of the 3-d oscillator repeats twice per angular period 2*pi
    orbit = make_orbit(OSC, 2.0, 1.0)
    assert orbit.period == pytest.approx(math.pi, rel=1e-9)
    assert period_average(orbit, lambda r: r * OSC.dv(r)) == pytest.approx(2 * period_average(orbit, OSC.v), rel=1e-9)


@pytest.mark.parametrize("p,E,l2", [(KEPLER, -0.5, 0.3), (KEPLER, -0.2, 2.0), (OSC, 3.0, 0.0),
                                    (OSC, 2.5, 2.0), (LIN, 1.7, 0.0), (LIN, 3.0, 6.0)])
def test_classical_residual_vanishes(p, E, l2):
    orbit = make_orbit(p, E, l2)
    # radial orbits through the origin converge more slowly
    tol = 1e-8 if l2 > 0 else 1e-7
    for j in (1, 2, 3, 4, 0.5):
        assert abs(classical_virial_residual(orbit, ProbeFunction.power(j)).lhs) < tol
    f = ProbeFunction.custom(np.sin, np.cos, lambda r: -np.sin(r), lambda r: -np.cos(r), q=1, b=1.0)
    assert abs(classical_virial_residual(orbit, f).lhs) < tol


@settings(max_examples=25, deadline=None)
@given(E=st.floats(0.6, 6.0), l2=st.floats(0.0, 4.0), j=st.integers(1, 4))
def test_oscillator_orbits_property(E, l2, j):
    try:
        orbit = make_orbit(OSC, E, l2)
    except NoOrbitError:
        return
    assert orbit.r_min <= orbit.r_max
    assert abs(classical_virial_residual(orbit, ProbeFunction.power(j)).lhs) < 1e-7


def test_quantum_classical_gap():
    for kind in ("oscillator", "linear"):
        s = state(kind, 0)
        g = quantum_classical_gap(s, make_orbit(s.potential, s.eps, 0.0), ProbeFunction.power(3))
        assert g.predicted_gap == pytest.approx(-1.5, abs=1e-9)
        assert abs(g.residual) < 1e-7
    s = state("oscillator", 1, 1)
    g = quantum_classical_gap(s, make_orbit(OSC, s.eps, 2.0), ProbeFunction.power(2))
    assert g.predicted_gap == 0.0 and abs(g.residual) < 1e-7
    # at the threshold exponent the quantum average of the gap integrand diverges
    with pytest.raises(DomainError):
        quantum_classical_gap(s, make_orbit(OSC, s.eps, 2.0), ProbeFunction.power(-2))


def test_orbit_errors():
    with pytest.raises(NoOrbitError):
        make_orbit(KEPLER, 0.1, 1.0)
    with pytest.raises(NoOrbitError):
        make_orbit(KEPLER, -0.6, 1.0)
    with pytest.raises(NoOrbitError):
        make_orbit(OSC, -1.0, 0.0)
    with pytest.raises(DomainError):
        make_orbit(OSC, 1.0, -1.0)
    s = state("oscillator", 0)
    with pytest.raises(DomainError):
        quantum_classical_gap(s, make_orbit(OSC, 2.0, 0.0), ProbeFunction.power(3))
    with pytest.raises(DomainError):
        quantum_classical_gap(s, make_orbit(OSC, s.eps, 0.5), ProbeFunction.power(3))
