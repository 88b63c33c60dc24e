"""Generalized virial relations for radial bound states.

Solve the scaled radial equation in N dimensions, evaluate expectation
values against P = R^2 and check the generalized virial relations, their
special cases and the exact recursions for power-law and Coulomb wells.
"""
__version__ = "0.1.0"

from .errors import (ConfigError, ConvergenceError, DomainError, GenVirialError,
                     NoBoundStateError, NoOrbitError, UnsupportedOrderError)
from .potentials import (Coulomb, Custom, PowerLaw, ScaledPotential, eval_derivative,
                         make_coulomb, make_custom, make_power_law)
from .radial import (DimensionConfig, Eigenstate, Grid, build_Q, exact_coulomb,
                     exact_linear_l0, exact_oscillator_l0, origin_coefficient, solve_eigenstate)
from .expectations import Moment, expect, expect_power, kinetic_moment, mehler_check
from .relations import (ProbeFunction, RelationReport, coulomb_kramer_chain, decay_width,
                        general_residual, linear_chain, ndim_residual, oscillator_odd_chain,
                        oscillator_v_chain, power_law_relation, special_case_residual)
from .classical import (ClassicalOrbit, classical_virial_residual, find_turning_points,
                        make_orbit, period_average, quantum_classical_gap)
from . import kernels

__all__ = [name for name in dir() if not name.startswith("_")]
