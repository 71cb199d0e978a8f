"""
Fifth-order upwind compact reconstruction (C5) and its central average (C6).

Left-biased rows, interface k between cells c = g+k-1 and c+1:
    1/2 x[k-1] + x[k] + 1/6 x[k+1] = 1/18 u[c-1] + 19/18 u[c] + 5/9 u[c+1]
Right-biased rows:
    1/6 x[k-1] + x[k] + 1/2 x[k+1] = 5/9 u[c] + 19/18 u[c+1] + 1/18 u[c+2]
Rows 0 and N are pinned to the MP5 values of the same line for periodic and
non-periodic problems alike.
"""

from typing import Optional

import numpy as np

from ..config.settings import ALPHA_DEFAULTS
from .linear import reconstruct_mp5
from .stencils import EigenPair, InterfaceStates, LineView
from .tridiagonal import pinned_band, pinned_system, solve_banded_rhs, thomas_solve

LEFT_COEFFS = (0.5, 1.0 / 6.0)      # (sub, sup)
RIGHT_COEFFS = (1.0 / 6.0, 0.5)


def c5_right_hand_sides(line: LineView):
    """Explicit right-hand sides of both systems, shape (..., N+1) each."""
    w = line.windows()
    rhs_left = w[..., 1] / 18.0 + 19.0 / 18.0 * w[..., 2] + 5.0 / 9.0 * w[..., 3]
    rhs_right = 5.0 / 9.0 * w[..., 2] + 19.0 / 18.0 * w[..., 3] + w[..., 4] / 18.0
    return rhs_left, rhs_right


def _solve_pinned(rhs: np.ndarray, coeffs, backend: str) -> np.ndarray:
    """Solve along the last axis for every leading index at once."""
    n = rhs.shape[-1]
    columns = np.moveaxis(rhs, -1, 0).reshape(n, -1)
    if backend == "thomas":
        solution = thomas_solve(pinned_system(n, coeffs[0], coeffs[1], columns))
    else:
        solution = solve_banded_rhs(pinned_band(n, coeffs[0], coeffs[1]), columns)
    return np.moveaxis(solution.reshape((n,) + rhs.shape[:-1]), 0, -1)


def reconstruct_c5(line: LineView, closure: Optional[InterfaceStates] = None,
                   alpha: float = ALPHA_DEFAULTS["MP5"], backend: str = "banded",
                   eigen: Optional[EigenPair] = None) -> InterfaceStates:
    """
    Upwind-biased compact pair from two tridiagonal solves.

    Args:
        line: Cell averages with filled ghosts
        closure: States supplying the pinned boundary rows; MP5 of the line if omitted
        alpha: MP5 parameter for the default closure
        backend: 'banded' (LAPACK) or 'thomas'
        eigen: Characteristic projection for the default MP5 closure; the
            compact rows themselves always work on the line values

    Raises:
        SingularSystemError: Propagated from the solver
    """
    if closure is None:
        closure = reconstruct_mp5(line, alpha, eigen)
    rhs_left, rhs_right = c5_right_hand_sides(line)
    rhs_left[..., 0] = closure.left[..., 0]
    rhs_left[..., -1] = closure.left[..., -1]
    rhs_right[..., 0] = closure.right[..., 0]
    rhs_right[..., -1] = closure.right[..., -1]
    return InterfaceStates(
        _solve_pinned(rhs_left, LEFT_COEFFS, backend),
        _solve_pinned(rhs_right, RIGHT_COEFFS, backend),
    )


def average_c6(states: InterfaceStates) -> InterfaceStates:
    """Central states: left = right = (U_L + U_R)/2 of the C5 pair."""
    return InterfaceStates.central(0.5 * (states.left + states.right))
