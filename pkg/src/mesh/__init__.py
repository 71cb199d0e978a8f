"""
Mesh package - uniform grids, cell fields and ghost-cell boundary conditions.
"""

from .grid import Grid1D, Grid2D
from .field import CellField, l1_error
from .boundary import (
    BoundaryCondition,
    BoundarySpec,
    FixedState,
    Periodic,
    Reflective,
    SplitCondition,
    TimeDependent,
    ZeroGradient,
    apply_boundaries,
    fill_ghosts,
)

__all__ = [
    'Grid1D',
    'Grid2D',
    'CellField',
    'l1_error',
    'BoundaryCondition',
    'BoundarySpec',
    'FixedState',
    'Periodic',
    'Reflective',
    'SplitCondition',
    'TimeDependent',
    'ZeroGradient',
    'apply_boundaries',
    'fill_ghosts',
]
