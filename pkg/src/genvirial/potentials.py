"""Scaled spherically symmetric potentials with analytic derivatives.

All quantities are in scaled units (hbar = M = a = 1).  A potential is
evaluated on scalars or numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, UnsupportedOrderError

__all__ = [
    "ScaledPotential",
    "PowerLaw",
    "Coulomb",
    "Custom",
    "make_power_law",
    "make_coulomb",
    "make_custom",
    "eval_derivative",
]


class ScaledPotential:
    """Base class.  Subclasses implement :meth:`derivative`.

    ``origin_exponent`` and ``origin_coefficient`` describe the leading
    small-rho behaviour ``v ~ coefficient * rho**exponent``; the radial
    solver and the quadrature use them to treat the origin exactly.
    """

    kind: str = "abstract"
    description: str = ""
    max_order: int = 3

    def derivative(self, rho, order: int = 0):
        raise NotImplementedError

    def __call__(self, rho):
        return self.derivative(rho, 0)

    def v(self, rho):
        return self.derivative(rho, 0)

    def dv(self, rho):
        return self.derivative(rho, 1)

    def d2v(self, rho):
        return self.derivative(rho, 2)

    def d3v(self, rho):
        return self.derivative(rho, 3)

    @property
    def origin_exponent(self) -> float:
        return 0.0

    @property
    def origin_coefficient(self) -> float:
        return 0.0

    @property
    def confining(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {"kind": self.kind, "description": self.description}


def _check_order(order: int, max_order: int = 3) -> None:
    if not isinstance(order, (int, np.integer)) or order < 0:
        raise UnsupportedOrderError(f"derivative order must be a nonnegative int, got {order!r}")
    if order > max_order:
        raise UnsupportedOrderError(f"derivative order {order} > {max_order} is not supported")


@dataclass(frozen=True)
class PowerLaw(ScaledPotential):
    """v(rho) = A rho**m / 2 with A > 0 and m > -2."""

    A: float
    m: float
    description: str = ""
    kind: str = field(default="power", init=False)

    def __post_init__(self):
        if not self.A > 0:
            raise DomainError(f"power-law strength A must be > 0, got {self.A}")
        if not self.m > -2:
            raise DomainError(f"power-law exponent m must be > -2, got {self.m}")
        if not self.description:
            object.__setattr__(self, "description", f"{self.A:g}*rho^{self.m:g}/2")

    def derivative(self, rho, order: int = 0):
        _check_order(order)
        rho = np.asarray(rho, dtype=float)
        coef = 0.5 * self.A
        for k in range(order):
            coef *= self.m - k
        if coef == 0.0:
            return np.zeros_like(rho)[()]
        return (coef * rho ** (self.m - order))[()]

    @property
    def origin_exponent(self) -> float:
        return float(self.m)

    @property
    def origin_coefficient(self) -> float:
        return 0.5 * self.A

    @property
    def confining(self) -> bool:
        return self.m > 0

    def to_dict(self) -> dict:
        return {"kind": "power", "A": self.A, "m": self.m}


@dataclass(frozen=True)
class Coulomb(ScaledPotential):
    """Attractive Coulomb potential v(rho) = -strength / rho."""

    strength: float = 1.0
    description: str = ""
    kind: str = field(default="coulomb", init=False)

    def __post_init__(self):
        if not self.strength > 0:
            raise DomainError(f"Coulomb strength must be > 0, got {self.strength}")
        if not self.description:
            object.__setattr__(self, "description", f"-{self.strength:g}/rho")

    def derivative(self, rho, order: int = 0):
        _check_order(order)
        rho = np.asarray(rho, dtype=float)
        # d^k/drho^k (-s/rho) = -s (-1)^k k! rho^-(k+1)
        coef = -self.strength * (-1) ** order * math.factorial(order)
        return (coef * rho ** (-(order + 1)))[()]

    @property
    def origin_exponent(self) -> float:
        return -1.0

    @property
    def origin_coefficient(self) -> float:
        return -self.strength

    @property
    def confining(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"kind": "coulomb", "strength": self.strength}


@dataclass(frozen=True)
class Custom(ScaledPotential):
    """User-supplied potential; every derivative must be given explicitly.

    Callables must accept numpy arrays.  ``d3v`` may be omitted, in which
    case order-3 requests raise :class:`UnsupportedOrderError`.
    """

    fv: Callable
    fdv: Callable
    fd2v: Callable
    fd3v: Optional[Callable] = None
    exponent: float = 0.0
    coefficient: float = 0.0
    is_confining: bool = True
    description: str = "custom"
    kind: str = field(default="custom", init=False)

    def derivative(self, rho, order: int = 0):
        _check_order(order)
        fn = (self.fv, self.fdv, self.fd2v, self.fd3v)[order]
        if fn is None:
            raise UnsupportedOrderError(f"custom potential {self.description!r} has no derivative of order {order}")
        return np.asarray(fn(np.asarray(rho, dtype=float)), dtype=float)[()]

    @property
    def max_order(self) -> int:  # type: ignore[override]
        return 3 if self.fd3v is not None else 2

    @property
    def origin_exponent(self) -> float:
        return float(self.exponent)

    @property
    def origin_coefficient(self) -> float:
        return float(self.coefficient)

    @property
    def confining(self) -> bool:
        return self.is_confining

    def to_dict(self) -> dict:
        return {"kind": "custom", "description": self.description}


def make_power_law(A: float, m: float) -> PowerLaw:
    """Return the power law ``A rho**m / 2``; rejects A <= 0 or m <= -2."""
    return PowerLaw(float(A), float(m))


def make_coulomb(strength: float = 1.0) -> Coulomb:
    return Coulomb(float(strength))


def make_custom(v, dv, d2v, d3v=None, *, exponent=0.0, coefficient=0.0, confining=True,
                description="custom") -> Custom:
    """Wrap user callables.  ``exponent``/``coefficient`` give v ~ c rho**e at the origin."""
    return Custom(v, dv, d2v, d3v, exponent, coefficient, confining, description)


def eval_derivative(p: ScaledPotential, rho: float, order: int) -> float:
    """d^order v / drho^order at a single positive rho."""
    _check_order(order)
    if not rho > 0:
        raise DomainError(f"rho must be > 0, got {rho}")
    return float(p.derivative(float(rho), order))
