"""Bound states of the radial equation R'' = Q_N R in N dimensions.

Q_N(rho) = 2 (v - eps) + K (K - 1) / rho^2 with K = l1 + (N - 1)/2.  The
solver shoots with Numerov's method from both ends, brackets the energy by
node counting and refines it by bisection on the matching Wronskian.  The
closed-form oscillator, linear and Coulomb states are provided for use as
oracles.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicSpline

from . import kernels
from .errors import ConvergenceError, DomainError, NoBoundStateError
from .potentials import Coulomb, PowerLaw, ScaledPotential
from .quadrature import integrate
from .specfun import airy, airy_zero, hermite, laguerre

__all__ = [
    "DimensionConfig",
    "Grid",
    "Eigenstate",
    "build_Q",
    "solve_eigenstate",
    "origin_coefficient",
    "default_grid",
    "exact_oscillator_l0",
    "exact_linear_l0",
    "exact_coulomb",
    "oscillator_c2",
]

DEFAULT_H = 1e-3
DEFAULT_MARGIN = 10.0
DEFAULT_TOL = 1e-15
_FIT_POINTS = 10
_FIT_DEGREE = 4
_LOG_RHO_START = 1e-6


@dataclass(frozen=True)
class DimensionConfig:
    """Spatial dimension N and leading angular index l1."""

    N: int = 3
    l1: int = 0

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"N must be >= 1, got {self.N}")
        if self.l1 < 0:
            raise DomainError(f"l1 must be >= 0, got {self.l1}")
        if self.N == 1 and self.l1 != 0:
            raise DomainError("N = 1 has no angular momentum; l1 must be 0")

    @property
    def K(self) -> Fraction:
        return Fraction(2 * self.l1 + self.N - 1, 2)

    @property
    def centrifugal(self) -> float:
        """K (K - 1); equals l (l + 1) for N = 3."""
        K = self.K
        return float(K * (K - 1))

    @property
    def l_eff(self) -> float:
        """K - 1: the 3-d angular momentum that reproduces this centrifugal term."""
        return float(self.K) - 1.0

    @property
    def origin_power(self) -> float:
        """Exponent of P = R^2 at the origin, 2 l1 + N - 1."""
        return float(2 * self.K)


@dataclass(frozen=True)
class Grid:
    """Uniform grid rho_i = i h, i = 1..nodes (the origin is implicit)."""

    h: float
    nodes: int

    def __post_init__(self):
        if not self.h > 0 or self.nodes < 16:
            raise DomainError(f"invalid grid h={self.h}, nodes={self.nodes}")

    @classmethod
    def uniform(cls, h: float, rho_max: float) -> "Grid":
        return cls(float(h), int(math.ceil(rho_max / h - 1e-9)))

    @property
    def rho_min(self) -> float:
        return self.h

    @property
    def rho_max(self) -> float:
        return self.h * self.nodes

    @property
    def rho(self) -> np.ndarray:
        return self.h * np.arange(1, self.nodes + 1, dtype=float)


@dataclass(frozen=True, eq=False)
class Eigenstate:
    """A normalized radial bound state sampled on ``grid.rho``.

    ``C2`` is the origin coefficient, P = R^2 ~ C2 rho^(2 l1 + N - 1).
    ``norm_residual`` is |Simpson - trapezoid| of the normalization integral
    for solver states and |int R^2 - 1| for closed-form states.
    """

    potential: ScaledPotential
    dim: DimensionConfig
    n: int
    eps: float
    grid: Grid
    R: np.ndarray
    Rdot: np.ndarray
    C2: float
    norm_residual: float
    fit_warning: bool = False
    label: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def rho(self) -> np.ndarray:
        return self.grid.rho

    @property
    def h(self) -> float:
        return self.grid.h

    @property
    def l(self) -> int:
        return self.dim.l1

    @property
    def P(self) -> np.ndarray:
        return self.R * self.R

    @property
    def Pdot(self) -> np.ndarray:
        return 2.0 * self.R * self.Rdot

    @property
    def origin_amplitude(self) -> float:
        """lim R / rho^K (positive by convention)."""
        return math.sqrt(self.C2)

    @property
    def slope_at_origin(self) -> float:
        """R'(0); only meaningful for K = 1 (N = 3, l = 0)."""
        if self.dim.K != 1:
            return 0.0
        return self.origin_amplitude

    def node_count(self) -> int:
        r = self.R[np.abs(self.R) > 1e-12 * np.max(np.abs(self.R))]
        return int(np.count_nonzero(np.diff(np.sign(r))))

    def metadata(self) -> dict:
        return {
            "label": self.label,
            "potential": self.potential.to_dict(),
            "N": self.dim.N,
            "l1": self.dim.l1,
            "n": self.n,
            "eps": self.eps,
            "C2": self.C2,
            "norm_residual": self.norm_residual,
            "h": self.grid.h,
            "rho_max": self.grid.rho_max,
            "fit_warning": self.fit_warning,
        }

    def to_csv(self, path) -> None:
        path = Path(path)
        with path.open("w") as fh:
            fh.write("rho,R,Rdot\n")
            for r, R, dR in zip(self.rho, self.R, self.Rdot):
                fh.write(f"{float(r)!r},{float(R)!r},{float(dR)!r}\n")

    def to_json(self, path) -> None:
        Path(path).write_text(json.dumps(self.metadata(), indent=2, sort_keys=True) + "\n")


def build_Q(p: ScaledPotential, dim: DimensionConfig, eps: float, rho):
    """Q_N(rho) = 2 (v - eps) + K (K - 1) / rho^2."""
    rho = np.asarray(rho, dtype=float)
    if np.any(rho <= 0):
        raise DomainError("rho must be > 0")
    return (2.0 * (p.v(rho) - eps) + dim.centrifugal / rho ** 2)[()]


# --------------------------------------------------------------------------
# origin treatment
# --------------------------------------------------------------------------

@dataclass
class _Start:
    mode: str            # "even", "origin" or "series"
    index: int           # first node the sweep starts from
    L: float = 0.0       # lim Q y at rho = 0 for unit amplitude ("origin" mode)
    c1: float = 0.0      # y = rho^K (1 + c1 rho + c2 rho^2 + ...)
    v0: float = 0.0      # v(0) for the even start


def _origin_start(p: ScaledPotential, dim: DimensionConfig) -> _Start:
    K = dim.K
    e, s = p.origin_exponent, p.origin_coefficient
    c1 = s / float(K) if (e == -1.0 and K > 0) else 0.0
    if K == 0:
        if e < 0:
            raise DomainError("N = 1 requires a potential that is finite at the origin")
        return _Start("even", 0, v0=s if e == 0 else 0.0)
    L: Optional[float] = None
    if K == 1:
        L = 2.0 * s if e == -1.0 else (0.0 if e > -1.0 else None)
    elif K == 2:
        L = 2.0 if e > -2.0 else None
    elif K == 3:
        L = 0.0
    if L is not None:
        return _Start("origin", 1, L=L, c1=c1)
    # hand over to the uniform grid once Numerov's local error on rho^K
    # (about |K (K-1) ... (K-5)| / (240 i^6)) drops below 1e-13
    Kf = float(K)
    lead = abs(math.prod(Kf - k for k in range(6)))
    i0 = max(4, int(math.ceil((lead / 2.4e-11) ** (1.0 / 6.0))))
    return _Start("series", i0, c1=c1)


class _Shooter:
    """Numerov machinery for one (potential, dimension, grid) triple."""

    def __init__(self, p: ScaledPotential, dim: DimensionConfig, grid: Grid):
        self.p, self.dim, self.grid = p, dim, grid
        h = grid.h
        self.h = h
        self.M = grid.nodes
        rho = h * np.arange(self.M + 1, dtype=float)
        self.rho = rho
        base = np.zeros(self.M + 1)
        base[1:] = 2.0 * p.v(rho[1:]) + dim.centrifugal / rho[1:] ** 2
        self.base = base                     # Q + 2 eps
        self.veff = 0.5 * base[1:]
        self.start = _origin_start(p, dim)
        self.K = float(dim.K)
        self.y = np.zeros(self.M + 1)
        self.z = np.zeros(self.M + 1)
        if self.start.mode == "series":
            self.start.index = min(self.start.index, self.M // 8)
            self._setup_log_grid()

    def _setup_log_grid(self):
        # y = rho^(1/2) phi(t), t = ln rho turns the singular origin into a
        # smooth exponential: phi'' = [(K - 1/2)^2 + 2 rho^2 (v - eps)] phi
        i0 = self.start.index
        t0, t1 = math.log(_LOG_RHO_START), math.log(i0 * self.h)
        dt = min(2e-3, 2e-2 / max(abs(self.K - 0.5), 1.0))
        nt = int(math.ceil((t1 - t0) / dt))
        t = np.linspace(t0, t1, nt + 1)
        r = np.exp(t)
        self.t_log = t
        self.dt_log = t[1] - t[0]
        self.log_base = (self.K - 0.5) ** 2 + 2.0 * r * r * self.p.v(r)
        self.log_r2 = r * r
        self.phi = np.zeros(nt + 1)
        self.log_nodes = np.log(self.rho[1:i0 + 1])

    def g(self, eps: float) -> np.ndarray:
        return self.h * self.h / 12.0 * (self.base - 2.0 * eps)

    def _init_outward(self, g, eps):
        st, y, h = self.start, self.y, self.h
        y[:] = 0.0
        if st.mode == "even":
            y[0] = 1.0
            y[1] = self._even_step(eps)
            return 1, 1.0 - h * h * 2.0 * (st.v0 - eps) / 12.0
        if st.mode == "origin":
            y[1] = h ** self.K * (1.0 + st.c1 * h + self._c2(eps) * h * h)
            return 1, -h * h * st.L / 12.0
        i0 = st.index
        y[1:i0 + 1] = self._log_start(eps)[0]
        return i0, (1.0 - g[i0 - 1]) * y[i0 - 1]

    def _log_start(self, eps: float):
        """y and y' at nodes 1..i0 from the log-variable integration."""
        t, phi, dt = self.t_log, self.phi, self.dt_log
        gl = dt * dt / 12.0 * (self.log_base - 2.0 * eps * self.log_r2)
        c1, c2 = self.start.c1, self._c2(eps)
        a = self.K - 0.5
        for i in (0, 1):
            r = math.exp(t[i] - t[0]) * _LOG_RHO_START
            phi[i] = math.exp(a * (t[i] - t[0])) * (1.0 + c1 * r + c2 * r * r)
        kernels.numerov_sweep(gl, phi, 1, phi.size - 1, (1.0 - gl[0]) * phi[0])
        # the sweep may have rescaled phi; carry on with whatever scale it has
        spl = CubicSpline(t, phi)
        tn = self.log_nodes
        rn = np.exp(tn)
        ph, dph = spl(tn), spl(tn, 1)
        sq = np.sqrt(rn)
        return sq * ph, (0.5 * ph + dph) / sq

    def _even_step(self, eps: float) -> float:
        """y(h) for y(0) = 1, y'(0) = 0, integrated on [0, h] only.

        v may have odd powers of rho (|x| in one dimension), so the even
        continuation is not smooth and a symmetric Numerov step would lose
        order; a one-sided high-order step does not.
        """
        v = self.p.v
        v0 = self.start.v0
        rhs = lambda t, u: (u[1], 2.0 * ((float(v(t)) if t > 0 else v0) - eps) * u[0])
        sol = solve_ivp(rhs, (0.0, self.h), (1.0, 0.0), method="DOP853",
                        rtol=2.5e-14, atol=1e-18)
        return float(sol.y[0, -1])

    def _c2(self, eps: float) -> float:
        e, s = self.p.origin_exponent, self.p.origin_coefficient
        if e == -1.0:
            return (2.0 * s * self.start.c1 - 2.0 * eps) / (4.0 * self.K + 2.0)
        if e >= 0.0:
            v0 = s if e == 0.0 else 0.0
            return 2.0 * (v0 - eps) / (4.0 * self.K + 2.0)
        return 0.0

    def count_nodes(self, eps: float) -> int:
        g = self.g(eps)
        i0, w_prev = self._init_outward(g, eps)
        return kernels.numerov_sweep(g, self.y, i0, self.M, w_prev)

    def outward(self, eps: float, stop: int) -> np.ndarray:
        g = self.g(eps)
        i0, w_prev = self._init_outward(g, eps)
        kernels.numerov_sweep(g, self.y, i0, stop, w_prev)
        return self.y

    def inward(self, eps: float, stop: int) -> np.ndarray:
        g = self.g(eps)
        z = self.z
        z[:] = 0.0
        z[self.M - 1] = 1e-30
        kernels.numerov_sweep(g, z, self.M - 1, stop, 0.0)
        return z

    def match_index(self, eps: float) -> int:
        # Join at the first maximum of |R|.  The residual derivative kink left
        # by a finite energy bracket enters moment identities weighted by
        # f(rho_m), so an inner join keeps high moments accurate; inward
        # integration is stable anywhere in the allowed region.
        allowed = np.flatnonzero(self.veff < eps)
        lo = self.start.index + 2
        if allowed.size == 0:
            return max(lo, self.M // 2)
        outer = int(min(max(allowed[-1] + 1, lo), self.M - 3))
        a = np.abs(self.outward(eps, outer + 1)[lo:outer + 1])
        peaks = np.flatnonzero((a[1:-1] >= a[:-2]) & (a[1:-1] > a[2:]))
        return lo + 1 + int(peaks[0]) if peaks.size else outer

    def wronskian(self, eps: float, m: int) -> float:
        y = self.outward(eps, m + 1)
        yo0, yo1 = y[m], y[m + 1]
        so = np.max(np.abs(y[: m + 2]))
        z = self.inward(eps, m)
        zi0, zi1 = z[m], z[m + 1]
        si = np.max(np.abs(z[m:]))
        return (yo0 * zi1 - yo1 * zi0) / (so * si)


def _find_energy(sh: _Shooter, n: int, tol: float, max_iter: int):
    lo = float(np.min(sh.veff))
    cap = float(sh.veff[-1])
    if sh.count_nodes(lo) > n:
        raise NoBoundStateError("node count exceeds n at the effective-potential minimum")
    step = max(1.0, 1e-3 * abs(lo))
    hi = lo + step
    nodes_hi = sh.count_nodes(hi)
    while nodes_hi <= n:
        lo = hi
        step *= 2.0
        hi = min(lo + step, cap)
        if hi <= lo:
            raise NoBoundStateError(f"no state with {n} nodes below the box edge ({cap:.6g})")
        nodes_hi = sh.count_nodes(hi)
        if nodes_hi <= n and hi >= cap:
            raise NoBoundStateError(f"no state with {n} nodes below the box edge ({cap:.6g})")
    # tighten until the bracket holds exactly one eigenvalue
    it = 0
    while True:
        nodes_lo = sh.count_nodes(lo)
        if nodes_lo == n and nodes_hi == n + 1:
            break
        mid = 0.5 * (lo + hi)
        nm = sh.count_nodes(mid)
        if nm <= n:
            lo = mid
        else:
            hi, nodes_hi = mid, nm
        it += 1
        if it > max_iter or hi - lo < tol:
            break
    m = sh.match_index(0.5 * (lo + hi))
    w_lo = sh.wronskian(lo, m)
    w_hi = sh.wronskian(hi, m)
    use_nodes = not (w_lo * w_hi < 0)
    it = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if use_nodes:
            if sh.count_nodes(mid) <= n:
                lo = mid
            else:
                hi = mid
        else:
            w_mid = sh.wronskian(mid, m)
            if w_mid == 0.0:
                lo = hi = mid
                break
            if (w_mid > 0) == (w_lo > 0):
                lo, w_lo = mid, w_mid
            else:
                hi = mid
        it += 1
        if it > max_iter:
            raise ConvergenceError(f"energy bisection did not reach tol={tol} in {max_iter} steps")
    return 0.5 * (lo + hi), m


def _fit_origin(rho, R, K):
    """Intercept of R / rho^K from a polynomial fit over the first grid decade."""
    r = rho[:_FIT_POINTS]
    u = R[:_FIT_POINTS] / r ** K
    coef, res, *_ = np.polyfit(r, u, _FIT_DEGREE, full=True)
    a = coef[-1]
    resid = np.sqrt(res[0] / r.size) if res.size else 0.0
    return a, bool(resid > 1e-6 * abs(a))


def origin_coefficient(s: Eigenstate) -> float:
    """C2 = lim P / rho^(2 l1 + N - 1), from a fixed-exponent fit near the origin."""
    a, _ = _fit_origin(s.rho, s.R, float(s.dim.K))
    return a * a


def _numerov_derivative(y, qy, h):
    """4th-order derivative from Numerov data; y, qy include the origin node."""
    d = np.empty(y.size - 1)
    d[:-1] = ((y[2:] - y[:-2]) - h * h / 6.0 * (qy[2:] - qy[:-2])) / (2.0 * h)
    t = y[-5:]
    d[-1] = (25 * t[4] - 48 * t[3] + 36 * t[2] - 16 * t[1] + 3 * t[0]) / (12.0 * h)
    return d


def default_grid(p: ScaledPotential, dim: DimensionConfig, n: int,
                 h: float = DEFAULT_H, margin: float = DEFAULT_MARGIN) -> Grid:
    """Grid reaching ``margin`` beyond the outer turning point (confining)
    or 40 principal quantum numbers (Coulomb)."""
    if isinstance(p, Coulomb):
        n_princ = n + float(dim.K)
        return Grid.uniform(h, 40.0 * n_princ / p.strength)
    if not p.confining:
        raise DomainError("a grid must be supplied for non-confining custom potentials")
    box = 20.0
    for _ in range(12):
        coarse = Grid.uniform(min(1e-2, h * 10), box)
        try:
            sh = _Shooter(p, dim, coarse)
            eps0, _ = _find_energy(sh, n, 1e-7, 200)
        except NoBoundStateError:
            box *= 2.0
            continue
        allowed = np.flatnonzero(sh.veff < eps0)
        rho_t = coarse.h * (allowed[-1] + 1) if allowed.size else box / 2
        if rho_t + margin < box:
            return Grid.uniform(h, rho_t + margin)
        box = 2.0 * (rho_t + margin)
    raise NoBoundStateError("could not size a box containing the requested state")


def solve_eigenstate(p: ScaledPotential, dim: DimensionConfig, n: int,
                     grid: Optional[Grid] = None, tol: float = DEFAULT_TOL,
                     max_iter: int = 400) -> Eigenstate:
    """Bound state with ``n`` radial nodes.

    Parameters
    ----------
    p : ScaledPotential
    dim : DimensionConfig
    n : int
        Number of interior nodes of R.
    grid : Grid, optional
        Defaults to :func:`default_grid` with h = 1e-3.
    tol : float
        Width of the final energy bracket.
    """
    if n < 0:
        raise DomainError(f"node count must be >= 0, got {n}")
    if grid is None:
        grid = default_grid(p, dim, n)
    sh = _Shooter(p, dim, grid)
    eps, m = _find_energy(sh, n, tol, max_iter)

    y = sh.outward(eps, m + 1).copy()
    z = sh.inward(eps, m)
    j = m if abs(z[m]) > 1e-3 * np.max(np.abs(z[m:])) else m + 1
    y[m + 1:] = z[m + 1:] * (y[j] / z[j])
    if sh.start.mode == "series":
        y[0] = 0.0

    h, K = grid.h, sh.K
    norm2 = integrate(y[1:] ** 2, h, 2.0 * K)
    scale = 1.0 / math.sqrt(norm2)
    if y[1] < 0:
        scale = -scale
    y *= scale
    _, err = integrate(y[1:] ** 2, h, 2.0 * K, with_error=True)

    qy = (sh.base - 2.0 * eps) * y
    st = sh.start
    if st.mode == "even":
        qy[0] = 2.0 * (st.v0 - eps) * y[0]
    elif st.mode == "origin":
        qy[0] = st.L * y[1] / (h ** K * (1.0 + st.c1 * h + sh._c2(eps) * h * h))
    else:
        qy[0] = 0.0
    Rdot = _numerov_derivative(y, qy, h)
    if st.mode == "series":
        Rdot[:st.index] = scale * sh._log_start(eps)[1]

    R = y[1:]
    a, warn = _fit_origin(grid.rho, R, K)
    state = Eigenstate(p, dim, n, float(eps), grid, R, Rdot, float(a * a), float(err), warn,
                       label=f"{p.kind}_N{dim.N}_n{n}_l{dim.l1}", meta={"match_index": m})
    return state


# --------------------------------------------------------------------------
# closed-form states
# --------------------------------------------------------------------------

def oscillator_c2(n: int) -> float:
    """C2 of the 3-d oscillator l = 0 state with n nodes."""
    lead = math.factorial(2 * n + 2) / math.factorial(n + 1)
    return lead * lead / (math.sqrt(math.pi) * 4.0 ** n * math.factorial(2 * n + 1))


def _finish_exact(p, dim, n, eps, grid, R, Rdot, C2, label):
    norm = integrate(R * R, grid.h, dim.origin_power)
    return Eigenstate(p, dim, n, float(eps), grid, R, Rdot, float(C2), abs(norm - 1.0),
                      False, label)


def exact_oscillator_l0(n: int, grid: Optional[Grid] = None) -> Eigenstate:
    """Closed-form l = 0 state of v = rho^2/2 with n nodes, eps = (4n+3)/2."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    eps = 0.5 * (4 * n + 3)
    if grid is None:
        grid = Grid.uniform(DEFAULT_H, math.sqrt(2 * eps) + DEFAULT_MARGIN)
    rho = grid.rho
    k = 2 * n + 1
    # sign (-1)^n makes R positive near the origin
    norm = (-1) ** n * math.pi ** -0.25 / math.sqrt(4.0 ** n * math.factorial(k))
    gauss = np.exp(-0.5 * rho * rho)
    H = hermite(k, rho)
    dH = 2.0 * k * hermite(k - 1, rho)
    R = norm * gauss * H
    Rdot = norm * gauss * (dH - rho * H)
    return _finish_exact(PowerLaw(1.0, 2.0), DimensionConfig(3, 0), n, eps, grid, R, Rdot,
                         oscillator_c2(n), f"oscillator_exact_n{n}_l0")


def exact_linear_l0(n: int, grid: Optional[Grid] = None) -> Eigenstate:
    """Airy state Ai(rho + Z_n) / Ai'(Z_n) of v = rho/2; n >= 1 counts from the ground state."""
    if n < 1:
        raise DomainError(f"linear-potential index starts at 1, got {n}")
    Z = airy_zero(n)
    eps = -0.5 * Z
    if grid is None:
        grid = Grid.uniform(DEFAULT_H, -Z + DEFAULT_MARGIN)
    ai, aip = airy(grid.rho + Z)
    slope = airy(Z)[1]
    return _finish_exact(PowerLaw(1.0, 1.0), DimensionConfig(3, 0), n - 1, eps, grid,
                         ai / slope, aip / slope, 1.0, f"linear_exact_n{n}_l0")


def exact_coulomb(n_princ: int, l: int, grid: Optional[Grid] = None) -> Eigenstate:
    """Hydrogenic state of v = -1/rho, eps = -1/(2 n^2)."""
    if not 0 <= l < n_princ:
        raise DomainError(f"need 0 <= l < n, got n={n_princ}, l={l}")
    n = n_princ
    k = n - l - 1
    eps = -0.5 / n ** 2
    if grid is None:
        grid = Grid.uniform(DEFAULT_H, 40.0 * n)
    rho = grid.rho
    x = 2.0 * rho / n
    A = math.sqrt(math.factorial(k) / (n * n * math.factorial(n + l)))
    Lg = laguerre(k, 2 * l + 1, x)
    dLg = -laguerre(k - 1, 2 * l + 2, x) if k > 0 else np.zeros_like(x)
    ex = np.exp(-0.5 * x)
    R = A * x ** (l + 1) * ex * Lg
    # d/dx [x^(l+1) e^(-x/2) L(x)], then chain rule dx/drho = 2/n
    dRdx = A * ex * ((l + 1) * x ** l * Lg - 0.5 * x ** (l + 1) * Lg + x ** (l + 1) * dLg)
    Rdot = dRdx * 2.0 / n
    C = A * (2.0 / n) ** (l + 1) * math.comb(k + 2 * l + 1, k)
    return _finish_exact(Coulomb(1.0), DimensionConfig(3, l), k, eps, grid, R, Rdot, C * C,
                         f"coulomb_exact_n{n}_l{l}")
