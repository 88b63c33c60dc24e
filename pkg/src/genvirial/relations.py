"""Generalized virial relations, their special cases and exact recursions.

For a probe f the relation reads

    < (1/f) d(f^2 Q)/drho > - 1/2 < f''' > = C^2 b (2K - 1)^2 delta_{q, q0}

with f ~ b rho^q near the origin, P ~ C^2 rho^(2K), K = l1 + (N-1)/2 and
q0 = 2 - 2K.  In three dimensions K = l + 1 and the boundary value is
C^2 b (2l + 1)^2 at q = -2l.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Union

import numpy as np
from scipy import constants

from .errors import DomainError
from .expectations import expect_power
from .potentials import PowerLaw, ScaledPotential
from .quadrature import integrate
from .radial import Eigenstate, oscillator_c2

__all__ = [
    "ProbeFunction",
    "RelationReport",
    "SPECIAL_CASES",
    "POWER_LAW_CASES",
    "boundary_factor",
    "boundary_factor_literature",
    "threshold_exponent",
    "general_residual",
    "ndim_residual",
    "special_case_residual",
    "power_law_relation",
    "oscillator_v_chain",
    "oscillator_odd_chain",
    "linear_chain",
    "coulomb_kramer_chain",
    "decay_width",
    "decay_width_natural",
]

Number = Union[int, float, Fraction]
_Q_EXACT_TOL = 1e-12


@dataclass(frozen=True)
class ProbeFunction:
    """Probe f with small-rho behaviour f ~ b rho^q.

    Use :meth:`power` for f = rho^j or :meth:`custom` for callables.
    """

    kind: str
    q: Number
    b: float = 1.0
    j: Optional[Number] = None
    funcs: tuple = ()

    @classmethod
    def power(cls, j: Number) -> "ProbeFunction":
        if isinstance(j, float) and j.is_integer():
            j = int(j)
        return cls("power", j, 1.0, j)

    @classmethod
    def custom(cls, f: Callable, df: Callable, d2f: Callable, d3f: Callable,
               q: Number, b: float) -> "ProbeFunction":
        return cls("custom", q, float(b), None, (f, df, d2f, d3f))

    @property
    def label(self) -> str:
        return f"rho^{self.j}" if self.kind == "power" else "custom"

    def derivative(self, rho, order: int = 0):
        if self.kind == "custom":
            return self.funcs[order](rho)
        j = float(self.j)
        c = math.prod(j - k for k in range(order))
        return c * rho ** (j - order)


@dataclass
class RelationReport:
    """Both sides of one identity on one state."""

    relation: str
    lhs: float
    rhs: float
    err: float = 0.0
    boundary: bool = False
    state: dict = field(default_factory=dict)
    flag: str = ""

    @property
    def residual(self) -> float:
        return self.lhs - self.rhs

    @property
    def relative(self) -> float:
        return self.residual / max(1.0, abs(self.lhs), abs(self.rhs))

    def passed(self, tol: float) -> bool:
        return abs(self.relative) <= tol

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "relative_residual": self.relative,
            "err": self.err,
            "boundary_term": self.boundary,
            "flag": self.flag,
            "state": dict(self.state),
        }

    CSV_HEADER = ("relation_id", "n", "l", "N", "lhs", "rhs", "residual")

    def csv_row(self) -> tuple:
        st = self.state
        return (self.relation, st.get("n"), st.get("l1"), st.get("N"),
                self.lhs, self.rhs, self.residual)


def _state_meta(s: Eigenstate) -> dict:
    return {"label": s.label, "n": s.n, "l1": s.dim.l1, "N": s.dim.N, "eps": s.eps}


# --------------------------------------------------------------------------
# boundary term
# --------------------------------------------------------------------------

def threshold_exponent(N: int, l1: int) -> Fraction:
    """q0 = -(2 l1 + N - 3); -2l in three dimensions."""
    return Fraction(-(2 * l1 + N - 3))


def boundary_factor(N: int, l1: int) -> int:
    """(2K - 1)^2 = (2 l1 + N - 2)^2, the limit of the origin terms at q = q0."""
    return (2 * l1 + N - 2) ** 2


def boundary_factor_literature(N: int, l1: int) -> Fraction:
    """(2 (2 l1 + N - 2)^2 - (2N - 3)(N - 3)) / 2, the literature form.

    It agrees with :func:`boundary_factor` only for N = 3.
    """
    return Fraction(2 * (2 * l1 + N - 2) ** 2 - (2 * N - 3) * (N - 3), 2)


def _same_q(q: Number, q0: Fraction) -> bool:
    if isinstance(q, (int, Fraction)):
        return Fraction(q) == q0
    return abs(float(q) - float(q0)) < _Q_EXACT_TOL


def _check_q(s: Eigenstate, f: ProbeFunction) -> bool:
    """Validate the probe exponent; True when the boundary term is active."""
    q0 = threshold_exponent(s.dim.N, s.dim.l1)
    if _same_q(f.q, q0):
        return True
    # in one dimension P is even, so f = rho leaves no boundary contribution
    if s.dim.K == 0 and _same_q(f.q, Fraction(1)):
        return False
    if float(f.q) < float(q0):
        raise DomainError(f"probe exponent q={f.q} is below the threshold q0={q0}")
    return False


def _check_growth(s: Eigenstate, f: ProbeFunction) -> str:
    fp = np.abs(f.derivative(s.rho) * s.P)
    top = float(np.max(fp))
    if top > 0 and fp[-1] > 1e-8 * top:
        return "probe*P not negligible at the grid edge"
    return ""


# --------------------------------------------------------------------------
# the general relation
# --------------------------------------------------------------------------

def _power_lhs(s: Eigenstate, p: ScaledPotential, j: Number):
    """lhs for f = rho^j with the rho^(j-3) terms combined analytically.

    (j-1)/2 (4 K(K-1) - j^2 + 2j) <rho^(j-3)> + 4j <rho^(j-1) (v - eps)>
    + 2 <rho^j v'>
    """
    rho, h, a = s.rho, s.h, s.dim.origin_power
    jf = float(j)
    lc = float(s.dim.K * (s.dim.K - 1))
    e = p.origin_exponent
    total, err = 0.0, 0.0
    c3 = (Fraction(j) - 1) / 2 * (4 * s.dim.K * (s.dim.K - 1) - Fraction(j) ** 2 + 2 * Fraction(j)) \
        if not isinstance(j, float) else (jf - 1) / 2 * (4 * lc - jf * jf + 2 * jf)
    if c3 != 0:
        m = expect_power(s, jf - 3)
        total += float(c3) * m.value
        err += abs(float(c3)) * m.err
    P = s.P
    if jf != 0.0:
        val, er = integrate(P * rho ** (jf - 1) * p.v(rho), h, a + jf - 1 + e,
                            with_error=True)
        m = expect_power(s, jf - 1)
        total += 4 * jf * (val - s.eps * m.value)
        err += 4 * abs(jf) * (er + abs(s.eps) * m.err)
    val, er = integrate(P * rho ** jf * p.dv(rho), h, a + jf + e - 1, with_error=True)
    total += 2 * val
    err += 2 * er
    return total, err


def _custom_lhs(s: Eigenstate, p: ScaledPotential, f: ProbeFunction):
    rho = s.rho
    lc = s.dim.centrifugal
    Q = 2.0 * (p.v(rho) - s.eps) + lc / rho ** 2
    dQ = 2.0 * p.dv(rho) - 2.0 * lc / rho ** 3
    g = 2.0 * f.derivative(rho, 1) * Q + f.derivative(rho, 0) * dQ - 0.5 * f.derivative(rho, 3)
    alpha = s.dim.origin_power + float(f.q) - 3.0
    if alpha <= -1.0:
        alpha = s.dim.origin_power + float(f.q) - 1.0
    return integrate(s.P * g, s.h, max(alpha, -0.5), with_error=True)


def _relation(s: Eigenstate, f: ProbeFunction, rid: str) -> RelationReport:
    p = s.potential
    active = _check_q(s, f)
    flag = _check_growth(s, f)
    if f.kind == "power":
        lhs, err = _power_lhs(s, p, f.j)
    else:
        lhs, err = _custom_lhs(s, p, f)
    rhs = s.C2 * f.b * boundary_factor(s.dim.N, s.dim.l1) if active else 0.0
    if s.fit_warning and active:
        flag = (flag + "; " if flag else "") + "origin fit residual large"
    return RelationReport(rid, float(lhs), float(rhs), float(err), active, _state_meta(s), flag)


def general_residual(s: Eigenstate, f: ProbeFunction) -> RelationReport:
    """Three-dimensional generalized relation for probe ``f`` on state ``s``."""
    if s.dim.N != 3:
        raise DomainError("general_residual is the 3-d relation; use ndim_residual")
    return _relation(s, f, f"general[{f.label}]")


def ndim_residual(s: Eigenstate, f: ProbeFunction) -> RelationReport:
    """N-dimensional generalized relation for probe ``f`` on state ``s``."""
    return _relation(s, f, f"ndim[N={s.dim.N},{f.label}]")


# --------------------------------------------------------------------------
# special cases, each side by its own quadrature
# --------------------------------------------------------------------------

SPECIAL_CASES = ("J0", "J1_virial", "J2", "J3", "J2L2", "JNEG2L")
POWER_LAW_CASES = ("P1", "p1", "P2", "P3", "P4", "P5")


def _pv(s: Eigenstate, j: float, g, q: float):
    """<rho^j g(rho)> where g ~ rho^q at the origin."""
    a = s.dim.origin_power + j + q
    if a <= -1.0:
        raise DomainError(f"integrand ~ rho^{a:g} diverges at the origin")
    return integrate(s.P * s.rho ** j * g(s.rho), s.h, a, with_error=True)


def special_case_residual(s: Eigenstate, case: str) -> RelationReport:
    """Named special instance of the 3-d relation.

    J0       <v'> = <l(l+1)/rho^3> + C^2/2 delta_{l0}
    J1_virial <rho v'> = 2 <eps - v>
    J2       <rho^2 v'> = 4 <rho (eps - v)> - <l(l+1)/rho>
    J3       <rho^3 v'> = 6 <rho^2 (eps - v)> - (2l-1)(2l+3)/2
    J2L2     <rho^(2l+2) v'> = 4(l+1) <rho^(2l+1) (eps - v)>
    JNEG2L   8l <rho^(-2l-1) (eps - v)> + 2 <rho^(-2l) v'> = C^2 (2l+1)^2
    """
    if case not in SPECIAL_CASES:
        raise DomainError(f"unknown special case {case!r}; choose from {SPECIAL_CASES}")
    if s.dim.N != 3:
        raise DomainError("special cases are stated for three dimensions")
    p, l, eps = s.potential, s.dim.l1, s.eps
    lc = l * (l + 1)
    e = p.origin_exponent
    ed = e - 1.0
    e0 = min(e, 0.0)
    tv = lambda r: eps - p.v(r)
    boundary = False
    if case == "J0":
        lhs, e1 = _pv(s, 0, p.dv, ed)
        rhs, e2 = (lc * expect_power(s, -3).value, expect_power(s, -3).err * lc) if l else (0.0, 0.0)
        if l == 0:
            rhs += 0.5 * s.C2
            boundary = True
    elif case == "J1_virial":
        lhs, e1 = _pv(s, 1, p.dv, ed)
        rhs, e2 = _pv(s, 0, tv, e0)
        rhs *= 2.0
    elif case == "J2":
        lhs, e1 = _pv(s, 2, p.dv, ed)
        a, e2 = _pv(s, 1, tv, e0)
        rhs = 4.0 * a
        if l:
            m = expect_power(s, -1)
            rhs -= lc * m.value
            e2 += lc * m.err
    elif case == "J3":
        lhs, e1 = _pv(s, 3, p.dv, ed)
        a, e2 = _pv(s, 2, tv, e0)
        rhs = 6.0 * a - 0.5 * (2 * l - 1) * (2 * l + 3)
    elif case == "J2L2":
        lhs, e1 = _pv(s, 2 * l + 2, p.dv, ed)
        a, e2 = _pv(s, 2 * l + 1, tv, e0)
        rhs = 4.0 * (l + 1) * a
    else:
        a, e1 = _pv(s, -2 * l - 1, tv, e0) if l else (0.0, 0.0)
        b, e3 = _pv(s, -2 * l, p.dv, ed)
        lhs = 8.0 * l * a + 2.0 * b
        e1 = 8.0 * l * e1 + 2.0 * e3
        rhs, e2 = s.C2 * (2 * l + 1) ** 2, 0.0
        boundary = True
    flag = "origin fit residual large" if boundary and s.fit_warning else ""
    return RelationReport(case, float(lhs), float(rhs), float(e1 + e2), boundary,
                          _state_meta(s), flag)


def power_law_relation(s: Eigenstate, p: ScaledPotential, case: str) -> RelationReport:
    """Closed relations for v = A rho^m / 2.

    P1  A <rho^(m-1)> = C^2 / m                                  (l = 0)
    p1  A <rho^(m-1)> = (2/m) <l(l+1)/rho^3>                     (l > 0)
    P2  <v> = 2 eps / (m + 2)
    P3  <rho^(-m/2-1)> = (m+2)(4l-m)(4l+4+m) / (32 m eps) <rho^(-m/2-3)>   (l > m/4)
    P4  8 l eps <rho^(-2l-1)> = (4l - m) A <rho^(m-2l-1)> + C^2 (2l+1)^2  (l > 0)
    P5  A <rho^(2l+1+m)> = 8 (l+1) eps / (4l + m + 4) <rho^(2l+1)>
    """
    if not isinstance(p, PowerLaw):
        raise DomainError("power-law relations need v = A rho^m / 2 with A > 0; "
                          "use coulomb_kramer_chain for the Coulomb case")
    if case not in POWER_LAW_CASES:
        raise DomainError(f"unknown case {case!r}; choose from {POWER_LAW_CASES}")
    if s.dim.N != 3:
        raise DomainError("power-law relations are stated for three dimensions")
    A, m, l, eps, C2 = p.A, p.m, s.dim.l1, s.eps, s.C2
    E = lambda j: expect_power(s, j)
    boundary = False
    if case == "P1":
        if l != 0:
            raise DomainError("P1 holds for l = 0; use p1 for l > 0")
        a = E(m - 1)
        lhs, rhs, err = A * a.value, C2 / m, A * a.err
        boundary = True
    elif case == "p1":
        if l == 0:
            raise DomainError("p1 needs l > 0")
        a, b = E(m - 1), E(-3)
        lhs, rhs, err = A * a.value, 2.0 / m * l * (l + 1) * b.value, A * a.err + b.err
    elif case == "P2":
        a = E(m)
        lhs, rhs, err = 0.5 * A * a.value, 2.0 * eps / (m + 2.0), a.err
    elif case == "P3":
        if not l > m / 4.0:
            raise DomainError(f"P3 needs l > m/4 (l={l}, m={m})")
        a, b = E(-m / 2.0 - 1.0), E(-m / 2.0 - 3.0)
        k = (m + 2.0) * (4 * l - m) * (4 * l + 4 + m) / (32.0 * m * eps)
        lhs, rhs, err = a.value, k * b.value, a.err + abs(k) * b.err
    elif case == "P4":
        if l == 0:
            raise DomainError("P4 needs l > 0")
        a, b = E(-2 * l - 1), E(m - 2 * l - 1)
        lhs = 8.0 * l * eps * a.value
        rhs = (4 * l - m) * A * b.value + C2 * (2 * l + 1) ** 2
        err = 8 * l * abs(eps) * a.err + abs(4 * l - m) * A * b.err
        boundary = True
    else:
        a, b = E(2 * l + 1 + m), E(2 * l + 1)
        k = 8.0 * (l + 1) * eps / (4 * l + m + 4)
        lhs, rhs, err = A * a.value, k * b.value, A * a.err + abs(k) * b.err
    flag = "origin fit residual large" if boundary and s.fit_warning else ""
    return RelationReport(case, float(lhs), float(rhs), float(err), boundary,
                          _state_meta(s), flag)


# --------------------------------------------------------------------------
# exact recursions
# --------------------------------------------------------------------------

def oscillator_v_chain(eps: float, l: int, k_max: int) -> List[float]:
    """[<v^0>, ..., <v^k_max>] for v = rho^2/2.

    <v^(k+1)> = (2k+1)/(2k+2) eps <v^k>
                - k / (16 (k+1)) (2l+1+2k)(2l+1-2k) <v^(k-1)>
    """
    out = [1.0, 0.5 * eps]
    for k in range(1, k_max):
        nxt = ((2 * k + 1) / (2 * k + 2) * eps * out[k]
               - k / (16.0 * (k + 1)) * (2 * l + 1 + 2 * k) * (2 * l + 1 - 2 * k) * out[k - 1])
        out.append(nxt)
    return out[:k_max + 1]


def oscillator_odd_chain(s: Eigenstate, j_max: int) -> Dict[int, float]:
    """Odd moments {j: <rho^j>} of an oscillator state up to j_max.

    For l = 0 the chain starts from <rho> = C^2/2 with the closed-form C^2.
    For l >= 1 it starts from <rho^(-2l-1)> and C^2 of the state.
    """
    l, eps = s.dim.l1, s.eps

    def step(j, lo, lo3):
        # <rho^(j+1)> from <rho^(j-1)> and <rho^(j-3)>, j even
        t = (2.0 * j / (j + 1)) * eps * lo
        c = (j - 1) / (4.0 * (j + 1)) * (2 * l + j) * (2 * l + 2 - j)
        return t - c * lo3 if c else t

    if l == 0:
        if not math.isclose(eps, 2 * s.n + 1.5, rel_tol=1e-6):
            raise DomainError("the l = 0 seed needs an oscillator state (eps = 2n + 3/2)")
        out = {1: 0.5 * oscillator_c2(s.n)}
        j = 2
    else:
        seed = expect_power(s, -2 * l - 1).value
        out = {-2 * l - 1: seed,
               1 - 2 * l: (8 * l * eps * seed - s.C2 * (2 * l + 1) ** 2) / (4 * l - 2)}
        j = 2 - 2 * l
    while j + 1 <= j_max:
        out[j + 1] = step(j, out[j - 1], out.get(j - 3, 0.0))
        j += 2
    return {k: v for k, v in sorted(out.items()) if k <= max(j_max, 1 - 2 * l)}


def linear_chain(eps: float, j_max: int) -> List[float]:
    """[<v^0>, ..., <v^j_max>] for v = rho/2, l = 0.

    <v^j> = 2j/(2j+1) eps <v^(j-1)> + j(j-1)(j-2)/(16(2j+1)) <v^(j-3)>
    """
    out = [1.0]
    for j in range(1, j_max + 1):
        val = 2.0 * j / (2 * j + 1) * eps * out[j - 1]
        if j >= 3:
            val += j * (j - 1) * (j - 2) / (16.0 * (2 * j + 1)) * out[j - 3]
        out.append(val)
    return out


def coulomb_kramer_chain(eps: float, l: int, j_max: int) -> Dict[int, float]:
    """{j: <rho^j>} for v = -1/rho, j = -1..j_max.

    2j eps <rho^(j-1)> + (2j-1) <rho^(j-2)> - (j-1)/4 (2l+j)(2l+2-j) <rho^(j-3)> = 0,
    started from <1> = 1 and <rho^-1> = -2 eps.
    """
    if not eps < 0:
        raise DomainError(f"bound Coulomb states need eps < 0, got {eps}")
    if j_max < 1:
        return {}
    out = {-1: -2.0 * eps, 0: 1.0}
    for j in range(2, j_max + 2):
        rest = (2 * j - 1) * out[j - 2]
        c = (j - 1) / 4.0 * (2 * l + j) * (2 * l + 2 - j)
        if c:
            rest -= c * out[j - 3]
        out[j - 1] = -rest / (2.0 * j * eps)
    return out


# --------------------------------------------------------------------------
# leptonic decay width
# --------------------------------------------------------------------------

def decay_width(C_n0_sq: float, a: float, M_V: float, e_q: float, alpha_e: float) -> float:
    """Leptonic width in GeV from the scaled origin coefficient.

    Gamma = 4 (c hbar / a) (hbar alpha_e e_q / (M_V c a))^2 C^2

    Parameters
    ----------
    C_n0_sq : float
        Origin coefficient of the l = 0 state (dimensionless).
    a : float
        Length scale in metres.
    M_V : float
        Vector-meson mass in kilograms.
    """
    if not a > 0 or not M_V > 0:
        raise DomainError("a and M_V must be positive")
    if not C_n0_sq >= 0:
        raise DomainError("C^2 must be non-negative")
    hbar, c = constants.hbar, constants.c
    ratio = hbar * alpha_e * e_q / (M_V * c * a)
    joules = 4.0 * (c * hbar / a) * ratio * ratio * C_n0_sq
    return joules / (constants.e * 1e9)


def decay_width_natural(C_n0_sq: float, a_inv_gev: float, M_V_gev: float, e_q: float,
                        alpha_e: float) -> float:
    """Same width with a in GeV^-1 and M_V in GeV (hbar = c = 1); returns GeV."""
    if not a_inv_gev > 0 or not M_V_gev > 0:
        raise DomainError("a and M_V must be positive")
    ratio = alpha_e * e_q / (M_V_gev * a_inv_gev)
    return 4.0 / a_inv_gev * ratio * ratio * C_n0_sq
