"""Special functions: Hermite, Airy, Laguerre, Gegenbauer, hyperspherical harmonics.

Everything here is self-contained except the Gauss-Jacobi nodes used to
normalize hyperspherical harmonics (``scipy.special.roots_jacobi``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "hermite",
    "hermite_function",
    "airy",
    "airy_zero",
    "laguerre",
    "gegenbauer",
    "assoc_gegenbauer",
    "AngularIndexSet",
    "lambda_of",
    "omega",
    "omega_norm",
    "spherical_to_cartesian",
]


# --------------------------------------------------------------------------
# Hermite / Laguerre
# --------------------------------------------------------------------------

def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by the three-term recurrence."""
    if n < 0:
        raise DomainError(f"Hermite degree must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x)
    if n == 0:
        return h_prev[()]
    h = 2.0 * x
    for k in range(1, n):
        h_prev, h = h, 2.0 * x * h - 2.0 * k * h_prev
    return h[()]


def hermite_function(n: int, x):
    """Normalized Hermite function H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)).

    Uses the normalized recurrence, so it does not overflow for large n.
    """
    if n < 0:
        raise DomainError(f"Hermite degree must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    p_prev = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n == 0:
        return p_prev[()]
    p = math.sqrt(2.0) * x * p_prev
    for k in range(1, n):
        p_prev, p = p, math.sqrt(2.0 / (k + 1)) * x * p - math.sqrt(k / (k + 1)) * p_prev
    return p[()]


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^(alpha)(x)."""
    if n < 0:
        raise DomainError(f"Laguerre degree must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x)
    if n == 0:
        return l_prev[()]
    l = 1.0 + alpha - x
    for k in range(1, n):
        l_prev, l = l, ((2 * k + 1 + alpha - x) * l - (k + alpha) * l_prev) / (k + 1)
    return l[()]


# --------------------------------------------------------------------------
# Airy
# --------------------------------------------------------------------------

_AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
_AIP0 = -1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))

_STEP = 0.25
_X_POS = 8.0          # asymptotic expansion is used for x >= _X_POS
_X_NEG = -40.0        # and for x < _X_NEG
_TAYLOR_TERMS = 40


def _asym_coeffs(kmax: int = 60):
    u = [1.0]
    for k in range(1, kmax + 1):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
    v = [1.0] + [-(6 * k + 1) / (6 * k - 1) * u[k] for k in range(1, kmax + 1)]
    return u, v


_U, _V = _asym_coeffs()


def _asym_sum(coef, zeta, sign, start=0, stride=1):
    """Sum sign^i coef[start+stride*i] / zeta^(start+stride*i), truncated at the smallest term."""
    total = 0.0
    last = math.inf
    i = 0
    while True:
        k = start + stride * i
        if k >= len(coef):
            break
        term = sign ** i * coef[k] / zeta ** k
        if abs(term) >= last:
            break
        total += term
        last = abs(term)
        if last < 1e-17 * abs(total):
            break
        i += 1
    return total


def _airy_asym_pos(x: float):
    zeta = 2.0 / 3.0 * x ** 1.5
    if zeta > 700.0:
        return 0.0, 0.0
    pre = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
    ai = pre * x ** -0.25 * _asym_sum(_U, zeta, -1.0)
    aip = -pre * x ** 0.25 * _asym_sum(_V, zeta, -1.0)
    return ai, aip


def _airy_asym_neg(x: float):
    t = -x
    zeta = 2.0 / 3.0 * t ** 1.5
    phase = zeta - math.pi / 4.0
    c, s = math.cos(phase), math.sin(phase)
    ue = _asym_sum(_U, zeta, -1.0, 0, 2)
    uo = _asym_sum(_U, zeta, -1.0, 1, 2)
    ve = _asym_sum(_V, zeta, -1.0, 0, 2)
    vo = _asym_sum(_V, zeta, -1.0, 1, 2)
    ai = t ** -0.25 / math.sqrt(math.pi) * (c * ue + s * uo)
    aip = t ** 0.25 / math.sqrt(math.pi) * (s * ve - c * vo)
    return ai, aip


def _taylor(x0, y0, yp0, t, nterms=_TAYLOR_TERMS):
    """Continue a solution of y'' = x y from x0 to x0 + t (arrays broadcast)."""
    a_km1 = np.zeros_like(t)  # a_{k-1}
    a_k = y0 + 0.0 * t        # a_0
    a_kp1 = yp0 + 0.0 * t     # a_1
    y = a_k + a_kp1 * t
    yp = a_kp1.copy()
    tp = t.copy()             # t^(k+1) for k = 0
    for k in range(0, nterms):
        a_next = (x0 * a_k + a_km1) / ((k + 2) * (k + 1))
        # a_next multiplies t^(k+2)
        yp = yp + (k + 2) * a_next * tp
        tp = tp * t
        y = y + a_next * tp
        a_km1, a_k, a_kp1 = a_k, a_kp1, a_next
    return y, yp


@lru_cache(maxsize=1)
def _airy_table():
    """Values (Ai, Ai') on a uniform node set covering [_X_NEG, _X_POS]."""
    nodes = np.arange(_X_NEG, _X_POS + 0.5 * _STEP, _STEP)
    ai = np.empty_like(nodes)
    aip = np.empty_like(nodes)
    i0 = int(np.argmin(np.abs(nodes)))
    ai[i0], aip[i0] = _AI0, _AIP0
    # toward negative x both solutions oscillate: stepping is stable
    for i in range(i0, 0, -1):
        y, yp = _taylor(np.float64(nodes[i]), ai[i], aip[i], np.array(-_STEP))
        ai[i - 1], aip[i - 1] = float(y), float(yp)
    # toward positive x Ai is the recessive solution: step inward from the tail
    top = len(nodes) - 1
    ai[top], aip[top] = _airy_asym_pos(float(nodes[top]))
    for i in range(top, i0 + 1, -1):
        y, yp = _taylor(np.float64(nodes[i]), ai[i], aip[i], np.array(-_STEP))
        ai[i - 1], aip[i - 1] = float(y), float(yp)
    return nodes, ai, aip


def airy(x):
    """Ai(x) and Ai'(x).

    Between -40 and 8 the function is obtained by a single Taylor step of
    the Airy equation from a precomputed node table; outside that range the
    asymptotic expansions are used.  Relative accuracy is ~1e-13 away from
    zeros of Ai.
    """
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xs = np.atleast_1d(x)
    ai = np.empty_like(xs)
    aip = np.empty_like(xs)
    nodes, tai, taip = _airy_table()
    inside = (xs >= _X_NEG) & (xs < _X_POS)
    if inside.any():
        xi = xs[inside]
        idx = np.clip(np.rint((xi - _X_NEG) / _STEP).astype(int), 0, len(nodes) - 1)
        y, yp = _taylor(nodes[idx], tai[idx], taip[idx], xi - nodes[idx])
        ai[inside], aip[inside] = y, yp
    for i in np.flatnonzero(~inside):
        ai[i], aip[i] = _airy_asym_pos(xs[i]) if xs[i] > 0 else _airy_asym_neg(xs[i])
    if scalar:
        return float(ai[0]), float(aip[0])
    return ai, aip


def airy_zero(k: int) -> float:
    """k-th zero (k >= 1) of Ai on the negative real axis, to ~1e-14."""
    if k < 1:
        raise DomainError(f"Airy zero index must be >= 1, got {k}")
    t = 3.0 * math.pi * (4 * k - 1) / 8.0
    x = -(t ** (2.0 / 3.0)) * (1.0 + 5.0 / 48.0 * t ** -2 - 5.0 / 36.0 * t ** -4)
    lo, hi = x - 0.5, x + 0.5
    f_lo = airy(lo)[0]
    if f_lo * airy(hi)[0] > 0:
        raise DomainError(f"failed to bracket Airy zero {k}")
    for _ in range(100):
        ai, aip = airy(x)
        step = ai / aip
        x_new = x - step
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if airy(x_new)[0] * f_lo > 0:
            lo, f_lo = x_new, airy(x_new)[0]
        else:
            hi = x_new
        if abs(x_new - x) < 1e-15 * max(1.0, abs(x)):
            return x_new
        x = x_new
    return x


# --------------------------------------------------------------------------
# Gegenbauer
# --------------------------------------------------------------------------

def _check_z(z):
    z = np.asarray(z, dtype=float)
    if np.any(np.abs(z) > 1.0 + 1e-12):
        raise DomainError("Gegenbauer argument must lie in [-1, 1]")
    return z


def _gegenbauer_raw(l: int, alpha: float, z):
    c_prev = np.ones_like(z)
    if l == 0:
        return c_prev
    c = 2.0 * alpha * z
    for n in range(1, l):
        c_prev, c = c, (2.0 * (n + alpha) * z * c - (n + 2.0 * alpha - 1.0) * c_prev) / (n + 1)
    return c


def gegenbauer(l: int, alpha: float, z):
    """Ultraspherical polynomial C_l^(alpha)(z) for |z| <= 1."""
    if l < 0:
        raise DomainError(f"degree must be >= 0, got {l}")
    if not alpha > 0:
        raise DomainError(f"alpha must be > 0, got {alpha}")
    return _gegenbauer_raw(l, alpha, _check_z(z))[()]


def assoc_gegenbauer(l: int, m: int, j: int, z):
    """F_{l,m}^{(j)}(z) = (-1)^m (1-z^2)^(m/2) d^m/dz^m C_l^(j/2)(z).

    The derivative uses d/dz C_n^(a) = 2a C_{n-1}^(a+1), applied m times.
    """
    if m < 0 or l < 0:
        raise DomainError("l and m must be nonnegative")
    if j < 1:
        raise DomainError(f"j must be a positive integer, got {j}")
    z = _check_z(z)
    if m > l:
        return np.zeros_like(z)[()]
    alpha = 0.5 * j
    scale = 1.0
    for i in range(m):
        scale *= 2.0 * (alpha + i)
    value = (-1) ** m * scale * np.clip(1.0 - z * z, 0.0, None) ** (0.5 * m) * _gegenbauer_raw(l - m, alpha + m, z)
    return value[()]


# --------------------------------------------------------------------------
# Hyperspherical harmonics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AngularIndexSet:
    """Quantum numbers l_1 >= l_2 >= ... >= |l_{N-1}| of an N-dim harmonic."""

    N: int
    l: tuple

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(v) for v in self.l))
        if self.N < 2:
            raise DomainError(f"angular index sets need N >= 2, got {self.N}")
        if len(self.l) != self.N - 1:
            raise DomainError(f"expected {self.N - 1} indices, got {len(self.l)}")
        if any(v < 0 for v in self.l[:-1]):
            raise DomainError("only the last index may be negative")
        chain = list(self.l[:-1]) + [abs(self.l[-1])]
        if any(a < b for a, b in zip(chain, chain[1:])):
            raise DomainError(f"indices must satisfy |l_(N-1)| <= ... <= l_1, got {self.l}")

    @property
    def l1(self) -> int:
        return self.l[0]


def lambda_of(idx: AngularIndexSet) -> int:
    """Eigenvalue magnitude l_1 (l_1 + N - 2) of the angular operator."""
    return idx.l1 * (idx.l1 + idx.N - 2)


def _omega_raw(idx: AngularIndexSet, theta):
    """Unnormalized product form; ``theta`` has shape (N-1, ...)."""
    N, l = idx.N, idx.l
    theta = [np.asarray(t, dtype=float) for t in theta]
    if len(theta) != N - 1:
        raise DomainError(f"expected {N - 1} angles, got {len(theta)}")
    value = np.exp(1j * l[-1] * theta[-1])
    for j in range(1, N - 1):
        upper = l[N - 2 - j]           # l_{N-1-j}
        lower = abs(l[N - 1 - j])      # l_{N-j}
        value = value * assoc_gegenbauer(upper, lower, j, np.cos(theta[N - 2 - j]))
    return value


_MAX_OMEGA_N = 6


@lru_cache(maxsize=None)
def _sphere_rule(N: int, npts: int):
    """Tensor rule on S^(N-1): Gauss-Jacobi in cos(theta_j), uniform in theta_(N-1)."""
    from scipy.special import roots_jacobi

    axes, weights = [], []
    for j in range(1, N - 1):
        # measure sin^(N-1-j)(theta_j) dtheta_j = (1-z^2)^((N-2-j)/2) dz
        a = 0.5 * (N - 2 - j)
        z, w = roots_jacobi(npts, a, a)
        axes.append(np.arccos(z))
        weights.append(w)
    phi = 2.0 * np.pi * np.arange(2 * npts) / (2 * npts)
    axes.append(phi)
    weights.append(np.full(phi.shape, 2.0 * np.pi / phi.size))
    mesh = np.meshgrid(*axes, indexing="ij")
    wmesh = np.ones_like(mesh[0])
    for i, w in enumerate(weights):
        shape = [1] * len(axes)
        shape[i] = -1
        wmesh = wmesh * w.reshape(shape)
    return mesh, wmesh


def sphere_integral(N: int, func, npts: int = 24):
    """Integrate func(theta_list) over the unit (N-1)-sphere."""
    if N > _MAX_OMEGA_N:
        raise DomainError(f"sphere quadrature is capped at N = {_MAX_OMEGA_N}")
    mesh, w = _sphere_rule(N, npts)
    return np.sum(w * func(mesh))


def omega_norm(idx: AngularIndexSet, npts: int = 24) -> float:
    """Normalization constant making the product form unit-normalized."""
    total = sphere_integral(idx.N, lambda th: np.abs(_omega_raw(idx, th)) ** 2, npts)
    return 1.0 / math.sqrt(float(np.real(total)))


def omega(N: int, idx: AngularIndexSet, theta: Sequence, normalize: bool = False):
    """Angular eigenfunction Omega_{l_1..l_(N-1)} at angles ``theta``.

    The unnormalized product of associated Gegenbauer factors is returned
    unless ``normalize`` is set, in which case the norm is found by
    quadrature over the sphere (N <= 6).
    """
    if idx.N != N:
        raise DomainError(f"index set is for N={idx.N}, not N={N}")
    value = _omega_raw(idx, theta)
    if normalize:
        value = value * omega_norm(idx)
    return value[()] if np.ndim(value) == 0 else value


def spherical_to_cartesian(N: int, r: float, theta: Sequence) -> np.ndarray:
    """Map (r, theta_1..theta_(N-1)) to Cartesian x_1..x_N."""
    if N < 2 or len(theta) != N - 1:
        raise DomainError(f"need N >= 2 and N-1 angles, got N={N}, {len(theta)} angles")
    x = np.empty(N)
    sin_prod = r
    for j in range(N - 1):
        x[j] = sin_prod * math.cos(theta[j])
        sin_prod *= math.sin(theta[j])
    x[N - 1] = sin_prod
    return x
