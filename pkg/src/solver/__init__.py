"""
Solver package - semi-discretization, sources and time stepping.
"""

from .config import SchemeConfig
from .sources import SourceTerm, apply_source, gravity
from .semi_discrete import (
    SemiDiscretization,
    build_candidates,
    reconstruct_line,
    rhs_1d,
    rhs_2d,
)
from .time_stepping import RunHistory, compute_dt, convergence_dt, integrate, rk3_step

__all__ = [
    'SchemeConfig',
    'SourceTerm',
    'apply_source',
    'gravity',
    'SemiDiscretization',
    'build_candidates',
    'reconstruct_line',
    'rhs_1d',
    'rhs_2d',
    'RunHistory',
    'compute_dt',
    'convergence_dt',
    'integrate',
    'rk3_step',
]
