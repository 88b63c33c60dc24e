"""Composite Simpson quadrature on a uniform grid starting one step from the origin.

Integrands behave like rho**alpha * (smooth) near rho = 0, with alpha
possibly fractional or negative (> -1).  The first few panels are handled
by a product-integration rule that is exact for rho**alpha times a
polynomial; the remainder uses Simpson's rule.  The error estimate is the
Simpson-trapezoid difference on the same nodes.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import DomainError

_HEAD = 6


@lru_cache(maxsize=256)
def _head_weights(alpha: float, m: int) -> np.ndarray:
    """Weights w_i (i = 1..m) with int_0^m t^alpha p(t) dt = sum w_i t_i^alpha p(t_i).

    Exact for polynomials p of degree < m.  Returned already divided by
    t_i^alpha, i.e. they act on integrand samples directly (unit spacing).
    """
    t = np.arange(1, m + 1, dtype=float)
    s = t / m
    k = np.arange(m)
    vander = s[None, :] ** k[:, None]            # rows: monomial k, cols: node
    moments = 1.0 / (alpha + k + 1.0)             # int_0^1 s^(alpha+k) ds
    w = np.linalg.solve(vander, moments) * m ** (alpha + 1.0)
    return w / t ** alpha


def reduced_alpha(alpha: float) -> float:
    """Drop the integer part of a nonnegative exponent; rho^int * smooth is smooth."""
    if alpha >= 0:
        return alpha - math.floor(alpha)
    return alpha


_BLOCK = 6
_BLOCK_SPAN = 2400  # nodes covered by block rules when alpha is fractional


@lru_cache(maxsize=8)
def _block_lagrange(npts: int = 16):
    """Gauss-Legendre points on [0, _BLOCK] and the Lagrange basis of nodes 0.._BLOCK there."""
    x, w = np.polynomial.legendre.leggauss(npts)
    u = 0.5 * _BLOCK * (x + 1.0)
    w = 0.5 * _BLOCK * w
    nodes = np.arange(_BLOCK + 1, dtype=float)
    basis = np.ones((npts, nodes.size))
    for i in range(nodes.size):
        for k in range(nodes.size):
            if k != i:
                basis[:, i] *= (u - nodes[k]) / (nodes[i] - nodes[k])
    return u, w, basis


def _block_weights(alpha: float, t0: int, nblocks: int) -> np.ndarray:
    """Product-integration weights for blocks [t0 + 6b, t0 + 6b + 6], b < nblocks.

    Returns an array of shape (nblocks, 7) acting on integrand samples.
    """
    u, w, basis = _block_lagrange()
    starts = t0 + _BLOCK * np.arange(nblocks, dtype=float)
    tg = starts[:, None] + u[None, :]                           # (nb, ng)
    ti = starts[:, None] + np.arange(_BLOCK + 1)[None, :]       # (nb, 7)
    return ((w[None, :] * tg ** alpha) @ basis) / ti ** alpha


def integrate(values, h: float, alpha: float = 0.0, with_error: bool = False):
    """Integrate samples F(i h), i = 1..M, over [0, M h].

    Parameters
    ----------
    values : array_like
        Integrand on the nodes h, 2h, ..., M h.
    h : float
        Grid spacing.
    alpha : float
        Leading small-rho exponent of the integrand; must exceed -1.
    with_error : bool
        Also return |Simpson - trapezoid| over the Simpson part.
    """
    f = np.asarray(values, dtype=float)
    if alpha <= -1.0:
        raise DomainError(f"integrand ~ rho^{alpha} is not integrable at the origin")
    a = reduced_alpha(alpha)
    M = f.size
    m = _HEAD if (M - _HEAD) % 2 == 0 else _HEAD + 1
    if M - m < 2:
        raise DomainError("grid too short for quadrature")
    head = float(np.dot(_head_weights(a, m), f[:m]))
    start = m                                   # node index t of the first Simpson node
    if a != 0.0:
        nb = max(0, min(_BLOCK_SPAN, M - m - 2) // _BLOCK)
        if nb:
            wb = _block_weights(a, m, nb)
            idx = m - 1 + _BLOCK * np.arange(nb)[:, None] + np.arange(_BLOCK + 1)[None, :]
            head += float(np.sum(wb * f[idx]))
            start = m + _BLOCK * nb
    head *= h
    tail = f[start - 1:]
    simpson = h / 3.0 * (tail[0] + tail[-1] + 4.0 * tail[1:-1:2].sum() + 2.0 * tail[2:-1:2].sum())
    value = head + simpson
    if not with_error:
        return value
    trap = h * (0.5 * (tail[0] + tail[-1]) + tail[1:-1].sum())
    return value, abs(simpson - trap)
