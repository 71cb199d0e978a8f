"""
Reconstruction package - interface values from cell averages along grid lines.
"""

from .stencils import InterfaceStates, LineView, project_windows, unproject, reconstruct_windowed
from .tridiagonal import TriDiag, thomas_solve, banded_solve
from .linear import (
    minmod,
    minmod4,
    linear5,
    mp5_limit,
    reconstruct_mp5,
    reconstruct_linear5,
    reconstruct_e6,
)
from .compact import reconstruct_c5, average_c6
from .weno import weno_z, reconstruct_wenoz
from .muscl import muscl_tvd, reconstruct_muscl
from .thinc import thinc, reconstruct_thinc

__all__ = [
    'InterfaceStates',
    'LineView',
    'project_windows',
    'unproject',
    'reconstruct_windowed',
    'TriDiag',
    'thomas_solve',
    'banded_solve',
    'minmod',
    'minmod4',
    'linear5',
    'mp5_limit',
    'reconstruct_mp5',
    'reconstruct_linear5',
    'reconstruct_e6',
    'reconstruct_c5',
    'average_c6',
    'weno_z',
    'reconstruct_wenoz',
    'muscl_tvd',
    'reconstruct_muscl',
    'thinc',
    'reconstruct_thinc',
]
