"""Expectation values against the radial density P = R^2.

Integrals run over the solver grid with the product-integration head rule of
:mod:`genvirial.quadrature`, so a small-rho behaviour rho^alpha of the
integrand is integrated exactly down to the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ConvergenceError, DomainError, UnsupportedOrderError
from .potentials import PowerLaw, ScaledPotential, eval_derivative
from .quadrature import integrate
from .radial import Eigenstate, Grid
from .specfun import hermite_function

__all__ = [
    "Moment",
    "expect",
    "expect_power",
    "kinetic_moment",
    "kinetic_moment_direct",
    "mehler_check",
    "mehler_diagonal",
]


@dataclass(frozen=True)
class Moment:
    """A quadrature expectation value with its |Simpson - trapezoid| estimate."""

    state: str
    observable: str
    value: float
    err: float

    def to_dict(self) -> dict:
        return {"state": self.state, "observable": self.observable,
                "value": self.value, "err": self.err}

    def __float__(self) -> float:
        return self.value


def _check_exponent(s: Eigenstate, q: float, what: str) -> float:
    alpha = s.dim.origin_power + q
    if alpha <= -1.0:
        raise DomainError(
            f"<{what}> diverges at the origin: integrand ~ rho^{alpha:g} (g ~ rho^{q:g})")
    return alpha


def _integrate_density(s: Eigenstate, values, q: float, what: str):
    alpha = _check_exponent(s, q, what)
    vals = np.asarray(values, dtype=float)
    if vals.shape != s.R.shape:
        vals = np.broadcast_to(vals, s.R.shape)
    if not np.all(np.isfinite(vals)):
        raise DomainError(f"<{what}> integrand is not finite on the grid")
    return integrate(s.P * vals, s.h, alpha, with_error=True)


def expect(s: Eigenstate, g: Callable, q: float = 0.0, name: Optional[str] = None) -> Moment:
    """<g> = int P g drho.

    Parameters
    ----------
    s : Eigenstate
    g : callable
        Vectorized function of rho.
    q : float
        Small-rho exponent of g (g ~ rho^q); used for the convergence check
        and to choose the exact head rule.
    """
    name = name or getattr(g, "__name__", "g")
    value, err = _integrate_density(s, g(s.rho), q, name)
    return Moment(s.label, name, float(value), float(err))


def expect_power(s: Eigenstate, j: float) -> Moment:
    """<rho^j>."""
    value, err = _integrate_density(s, s.rho ** j, j, f"rho^{j:g}")
    return Moment(s.label, f"rho^{j:g}", float(value), float(err))


# --------------------------------------------------------------------------
# kinetic-energy moments
# --------------------------------------------------------------------------

def _deriv_exponent(p: ScaledPotential, k: int) -> Optional[float]:
    """Small-rho exponent of d^k v, or None when it vanishes identically."""
    e = p.origin_exponent
    if isinstance(p, PowerLaw) and float(p.m).is_integer() and 0 <= p.m < k:
        return None
    return e - k


def _add(total, s, values, q, what):
    value, err = _integrate_density(s, values, q, what)
    return total[0] + value, total[1] + err


def kinetic_moment(s: Eigenstate, p: Optional[ScaledPotential] = None, order: int = 1) -> Moment:
    """<T^order> for order 1..4 from potential moments.

    <T>   = eps - <v>
    <T^2> = <(eps - v)^2>
    <T^3> = <(eps - v)^3> + 1/2 <v'^2>
    <T^4> = <(eps - v)^4> + 4 <(eps - v - l(l+1)/(4 rho^2)) v'^2>
            + 3/4 <v''^2> + 1/2 <v' v'''>
    """
    if order not in (1, 2, 3, 4):
        raise UnsupportedOrderError(f"kinetic moments are available for orders 1..4, got {order}")
    p = p if p is not None else s.potential
    if s.dim.N != 3:
        raise DomainError("kinetic moments are implemented for the 3-d radial problem")
    if order == 4:
        # refuse rather than difference a user callable three times
        eval_derivative(p, 1.0, 3)
    rho = s.rho
    e0 = min(0.0, p.origin_exponent)
    v = p.v(rho)
    tv = s.eps - v
    if order == 1:
        m = expect(s, p.v, e0, "v")
        return Moment(s.label, "T^1", s.eps - m.value, m.err)
    total = _add((0.0, 0.0), s, tv ** order, order * e0, f"(eps-v)^{order}")
    if order >= 3:
        q1 = _deriv_exponent(p, 1)
        dv = p.dv(rho)
    if order == 3 and q1 is not None:
        total = _add(total, s, 0.5 * dv * dv, 2 * q1, "v'^2/2")
    if order == 4:
        q2, q3 = _deriv_exponent(p, 2), _deriv_exponent(p, 3)
        cent = s.l * (s.l + 1) / (4.0 * rho * rho)
        if q1 is not None:
            qa = 2 * q1 + (-2.0 if s.l > 0 else e0)
            total = _add(total, s, 4.0 * (tv - cent) * dv * dv, qa, "(eps-v-c)v'^2")
        if q2 is not None:
            d2 = p.d2v(rho)
            total = _add(total, s, 0.75 * d2 * d2, 2 * q2, "v''^2")
        if q1 is not None and q3 is not None:
            d3 = p.d3v(rho)
            total = _add(total, s, 0.5 * dv * d3, q1 + q3, "v'v'''")
    return Moment(s.label, f"T^{order}", float(total[0]), float(total[1]))


def kinetic_moment_direct(s: Eigenstate, order: int) -> Moment:
    """<T^order> from the kinetic operator acting on R.

    Uses the Hermiticity of T: <T> = <R|T|R>, <T^2> = ||T R||^2,
    <T^3> = <TR|T|TR>, <T^4> = ||T^2 R||^2 with T R = (eps - v) R and
    T^2 R = (eps - v)^2 R + v' R' + v'' R / 2.
    """
    if order not in (1, 2, 3, 4):
        raise UnsupportedOrderError(f"order must be 1..4, got {order}")
    p, rho, R, dR, h = s.potential, s.rho, s.R, s.Rdot, s.h
    lc = s.dim.centrifugal
    a = s.dim.origin_power
    e0 = min(0.0, p.origin_exponent)

    def sandwich(phi, dphi, q):
        # <phi|T|phi> = 1/2 int phi'^2 + 1/2 K(K-1) int phi^2 / rho^2
        kin, e1 = integrate(dphi * dphi, h, a + 2 * q - 2, with_error=True)
        val, e2 = kin, e1
        if lc:
            cen, e2 = integrate(phi * phi / rho ** 2, h, a + 2 * q - 2, with_error=True)
            val += lc * cen
        return 0.5 * val, 0.5 * (e1 + e2)

    tv = s.eps - p.v(rho)
    if order == 1:
        val, err = sandwich(R, dR, 0.0)
    elif order == 2:
        val, err = integrate((tv * R) ** 2, h, a + 2 * e0, with_error=True)
    elif order == 3:
        phi = tv * R
        dphi = -p.dv(rho) * R + tv * dR
        val, err = sandwich(phi, dphi, e0)
    else:
        t2 = tv * tv * R + p.dv(rho) * dR + 0.5 * p.d2v(rho) * R
        q = min(2 * e0, p.origin_exponent - 2)
        if a + 2 * q <= -1:
            raise DomainError(f"<T^4> diverges at the origin (integrand ~ rho^{a + 2 * q:g})")
        val, err = integrate(t2 * t2, h, a + 2 * q, with_error=True)
    return Moment(s.label, f"T^{order} (operator form)", float(val), float(err))


# --------------------------------------------------------------------------
# Mehler generating-function check
# --------------------------------------------------------------------------

def mehler_diagonal(n: int) -> float:
    """int_0^inf H_(2n+1)(x)^2 exp(-x^2) x dx = 2 ((2n+1)! / n!)^2."""
    r = math.factorial(2 * n + 1) / math.factorial(n)
    return 2.0 * r * r


def mehler_check(k: float, u: float, n_max: int, h: float = 1e-3):
    """Series and closed form of the odd-index Mehler sum.

    series = sum_{n<=n_max} u^(2n+1) int_0^inf H_(2n+1)^2 e^(-x^2) x^(2k-1) dx
             / ((2n+1)! 2^(2n+1))
    closed = Gamma(k) / (4 sqrt(1-u^2)) [((1+u)/(1-u))^k - ((1-u)/(1+u))^k]

    Returns
    -------
    (series, closed) : tuple of float
    """
    if not 0.0 < u < 1.0:
        raise DomainError(f"u must lie in (0, 1), got {u}")
    if not k > 0.0:
        raise DomainError(f"k must be > 0, got {k}")
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    top = 2 * n_max + 1
    grid = Grid.uniform(h, math.sqrt(2.0 * top + 1.0) + 10.0)
    x = grid.rho
    weight = math.sqrt(math.pi) * x ** (2.0 * k - 1.0)
    terms = []
    for n in range(n_max + 1):
        phi = hermite_function(2 * n + 1, x)
        val = integrate(phi * phi * weight, h, 2.0 * k + 1.0)
        terms.append(u ** (2 * n + 1) * val)
    if len(terms) >= 3 and terms[-2] > 0:
        ratio = terms[-1] / terms[-2]
        if ratio >= 1.0:
            raise ConvergenceError(f"Mehler series not converging (tail ratio {ratio:.3g})")
    series = math.fsum(terms)
    a = (1.0 + u) / (1.0 - u)
    closed = math.gamma(k) / (4.0 * math.sqrt(1.0 - u * u)) * (a ** k - a ** -k)
    return series, closed
