"""Radial time averages of bound classical orbits (M = 1).

The radial kinetic energy is T_r = E - V(r) - l^2 / (2 r^2) and time
averages over one radial period are

    <g> = int g dr / sqrt(2 T_r) / int dr / sqrt(2 T_r).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import DomainError, NoOrbitError
from .potentials import ScaledPotential
from .quadrature import integrate
from .radial import Eigenstate
from .relations import ProbeFunction, RelationReport, boundary_factor, _check_q

__all__ = [
    "ClassicalOrbit",
    "find_turning_points",
    "make_orbit",
    "period_average",
    "classical_virial_residual",
    "quantum_classical_gap",
    "GapReport",
]

DEFAULT_NODES = 2048
CIRCULAR_TOL = 1e-8


def _radial_kinetic(p: ScaledPotential, E: float, l2: float, r):
    r = np.asarray(r, dtype=float)
    return E - p.v(r) - 0.5 * l2 / (r * r)


@dataclass(frozen=True)
class ClassicalOrbit:
    """A bound orbit described by its radial turning points."""

    potential: ScaledPotential
    E: float
    l2: float
    r_min: float
    r_max: float
    period: float
    circular: bool = False

    def T_r(self, r):
        return _radial_kinetic(self.potential, self.E, self.l2, r)

    def dT_r(self, r):
        r = np.asarray(r, dtype=float)
        return -self.potential.dv(r) + self.l2 / r ** 3

    def to_dict(self) -> dict:
        return {"E": self.E, "l2": self.l2, "r_min": self.r_min, "r_max": self.r_max,
                "period": self.period, "circular": self.circular}


def _root(fn, a, b):
    return brentq(fn, a, b, xtol=1e-300, rtol=4.0 * np.finfo(float).eps, maxiter=500)


def _veff_minimum(p: ScaledPotential, l2: float):
    veff = lambda r: float(p.v(r)) + 0.5 * l2 / (r * r)
    rs = np.logspace(-6, 6, 1201)
    vals = p.v(rs) + 0.5 * l2 / rs ** 2
    k = int(np.argmin(vals))
    if k == 0 or k == rs.size - 1:
        raise NoOrbitError("effective potential has no interior minimum")
    dveff = lambda r: float(p.dv(r)) - l2 / r ** 3
    a, b = rs[k - 1], rs[k + 1]
    if dveff(a) < 0 < dveff(b):
        r_c = _root(dveff, a, b)
    else:
        r_c = float(minimize_scalar(veff, bracket=(a, rs[k], b)).x)
    return r_c, veff(r_c)


def find_turning_points(p: ScaledPotential, E: float, l2: float):
    """Radial turning points (r_min, r_max) of a bound orbit.

    r_min = 0 when l2 = 0 and the motion reaches the origin; r_min = r_max
    for a circular orbit.
    """
    if l2 < 0:
        raise DomainError(f"l2 must be >= 0, got {l2}")
    T = lambda r: float(_radial_kinetic(p, E, l2, r))
    if l2 == 0:
        lo = 1e-12
        if T(lo) <= 0:
            raise NoOrbitError(f"E={E} lies below the potential near the origin")
        r_min, start = 0.0, lo
    else:
        r_c, v_min = _veff_minimum(p, l2)
        if E < v_min - 1e-14 * max(1.0, abs(v_min)):
            raise NoOrbitError(f"E={E} lies below the effective-potential minimum {v_min}")
        if E - v_min <= 1e-14 * max(1.0, abs(v_min)):
            return r_c, r_c
        a = r_c
        while T(a) > 0:
            a *= 0.5
            if a < 1e-300:
                raise NoOrbitError("inner turning point not found")
        r_min, start = _root(T, a, r_c), r_c
    b = max(2.0 * start, 1.0)
    while T(b) > 0:
        b *= 2.0
        if b > 1e12:
            raise NoOrbitError(f"motion at E={E} is unbounded")
    r_max = _root(T, start, b)
    return r_min, r_max


@lru_cache(maxsize=8)
def _chebyshev(n: int):
    theta = (2.0 * np.arange(1, n + 1) - 1.0) * math.pi / (2.0 * n)
    return np.cos(theta), math.pi / n


@lru_cache(maxsize=8)
def _legendre(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _measure(orbit: ClassicalOrbit, nodes: int):
    """Nodes r_k and weights w_k with sum w_k g(r_k) ~ int g dr / sqrt(2 T_r)."""
    lo, hi = orbit.r_min, orbit.r_max
    if lo > 0:
        c, d = 0.5 * (hi + lo), 0.5 * (hi - lo)
        x, w = _chebyshev(nodes)
        r = c + d * x
        # T_r minus its linear interpolant at the computed roots vanishes
        # exactly there, so the smooth factor below has no root-error spike
        t_lo, t_hi = float(orbit.T_r(lo)), float(orbit.T_r(hi))
        T = orbit.T_r(r) - (t_lo * (hi - r) + t_hi * (r - lo)) / (hi - lo)
        F = T / ((r - lo) * (hi - r))
        if np.any(F <= 0):
            raise NoOrbitError("T_r is not positive between the turning points")
        # dr / sqrt(2 T_r) = dtheta / sqrt(2 F) for r = c + d cos(theta)
        return r, w / np.sqrt(2.0 * F)
    # orbit through the origin: r = r_max sin^2(phi) removes the r_max singularity
    x, w = _legendre(nodes)
    phi = 0.25 * math.pi * (x + 1.0)
    s, co = np.sin(phi), np.cos(phi)
    r = hi * s * s
    T = orbit.T_r(r) - float(orbit.T_r(hi))
    if np.any(T <= 0):
        raise NoOrbitError("T_r is not positive inside the orbit")
    jac = 2.0 * hi * s * co * 0.25 * math.pi
    return r, w * jac / np.sqrt(2.0 * T)


def make_orbit(p: ScaledPotential, E: float, l2: float, nodes: int = DEFAULT_NODES) -> ClassicalOrbit:
    """Build the orbit with turning points and radial period."""
    r_min, r_max = find_turning_points(p, E, l2)
    if r_max - r_min < CIRCULAR_TOL:
        r_c = 0.5 * (r_min + r_max)
        # small-oscillation period 2 pi / omega with omega^2 = V_eff''(r_c)
        k = float(p.d2v(r_c)) + 3.0 * l2 / r_c ** 4
        period = 2.0 * math.pi / math.sqrt(k) if k > 0 else float("nan")
        return ClassicalOrbit(p, E, l2, r_c, r_c, period, True)
    orbit = ClassicalOrbit(p, E, l2, r_min, r_max, 0.0)
    _, w = _measure(orbit, nodes)
    return ClassicalOrbit(p, E, l2, r_min, r_max, 2.0 * float(np.sum(w)))


def period_average(orbit: ClassicalOrbit, g: Callable, nodes: int = DEFAULT_NODES) -> float:
    """Time average of g(r) over one radial period."""
    if orbit.circular:
        return float(g(np.array([orbit.r_min]))[0])
    r, w = _measure(orbit, nodes)
    vals = np.asarray(g(r), dtype=float) * np.ones_like(r)
    if not np.all(np.isfinite(vals)):
        raise NoOrbitError("averaged function is singular inside the orbit")
    return float(np.dot(w, vals) / np.sum(w))


def classical_virial_residual(orbit: ClassicalOrbit, f: ProbeFunction,
                              nodes: int = DEFAULT_NODES) -> RelationReport:
    """< (1/f) d(f^2 T_r)/dr > = < 2 f' T_r + f T_r' >, which vanishes for every f."""
    meta = orbit.to_dict()
    rid = f"classical[{f.label}]"
    if orbit.circular:
        # T_r and T_r' both vanish at the circular radius
        return RelationReport(rid, 0.0, 0.0, 0.0, False, meta)
    g = lambda r: 2.0 * f.derivative(r, 1) * orbit.T_r(r) + f.derivative(r, 0) * orbit.dT_r(r)
    val = period_average(orbit, g, nodes)
    val2 = period_average(orbit, g, nodes // 2)
    return RelationReport(rid, val, 0.0, abs(val - val2), False, meta)


class GapReport(NamedTuple):
    """Quantum and classical averages of (1/f) d(f^2 T_r)/drho."""

    quantum_lhs: float
    classical_lhs: float
    predicted_gap: float

    @property
    def residual(self) -> float:
        return (self.quantum_lhs - self.classical_lhs) - self.predicted_gap


def quantum_classical_gap(s: Eigenstate, orbit: ClassicalOrbit, f: ProbeFunction) -> GapReport:
    """Compare the quantum and classical relations for the same probe.

    With Q = -2 T_r the quantum relation gives
    <(1/f)(f^2 T_r)'> = -1/4 <f'''> - 1/2 C^2 b (2K-1)^2 delta_{q,q0},
    while the classical average vanishes; the difference is the predicted gap.
    """
    if f.kind == "custom" and len(f.funcs) < 4:
        raise DomainError("the gap needs f'''")
    if not math.isclose(orbit.E, s.eps, rel_tol=1e-9, abs_tol=1e-12):
        raise DomainError("orbit energy must equal the state energy")
    lc = s.dim.centrifugal
    if not math.isclose(orbit.l2, lc, rel_tol=1e-12, abs_tol=1e-14):
        raise DomainError("orbit l2 must equal K(K-1) of the state")
    active = _check_q(s, f)
    rho, p = s.rho, s.potential
    T = s.eps - p.v(rho) - 0.5 * lc / rho ** 2
    dT = -p.dv(rho) + lc / rho ** 3
    g = 2.0 * f.derivative(rho, 1) * T + f.derivative(rho, 0) * dT
    a = s.dim.origin_power + float(f.q) - 3.0
    if a <= -1.0:
        raise DomainError(f"quantum average diverges at the origin (integrand ~ rho^{a:g})")
    quantum = integrate(s.P * g, s.h, a)
    f3 = integrate(s.P * f.derivative(rho, 3) * np.ones_like(rho), s.h, max(a, 0.0))
    boundary = s.C2 * f.b * boundary_factor(s.dim.N, s.dim.l1) if active else 0.0
    classical = classical_virial_residual(orbit, f).lhs
    return GapReport(float(quantum), float(classical), float(-0.25 * f3 - 0.5 * boundary))
