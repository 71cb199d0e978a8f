"""
Physics package - gas state algebra, Riemann fluxes and conservation laws.
"""

from .euler_state import (
    GasModel,
    PrimitiveState,
    ConservativeState,
    InterfaceFrame,
    prim_to_cons,
    cons_to_prim,
    sound_speed,
    interface_frame,
    to_characteristic,
    from_characteristic,
    roe_average,
)
from .riemann_flux import physical_flux, hllc_flux, glf_flux, wave_speeds
from .exact_riemann import RiemannSolution, solve_riemann, exact_riemann
from .models import ConservationLaw, LinearAdvection, EulerEquations

__all__ = [
    'GasModel',
    'PrimitiveState',
    'ConservativeState',
    'InterfaceFrame',
    'prim_to_cons',
    'cons_to_prim',
    'sound_speed',
    'interface_frame',
    'to_characteristic',
    'from_characteristic',
    'roe_average',
    'physical_flux',
    'hllc_flux',
    'glf_flux',
    'wave_speeds',
    'RiemannSolution',
    'solve_riemann',
    'exact_riemann',
    'ConservationLaw',
    'LinearAdvection',
    'EulerEquations',
]
