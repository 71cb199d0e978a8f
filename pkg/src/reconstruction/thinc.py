"""
THINC reconstruction: a hyperbolic-tangent jump fitted inside monotone cells.

Non-monotone or flat cells fall back to the cell average on both faces.
"""

from typing import Optional

import numpy as np

from ..config.settings import THINC_EPSILON
from .linear import _unpack
from .stencils import EigenPair, InterfaceStates, LineView, reconstruct_windowed


def thinc_values(um1, u0, up1, beta: float, eps: float = THINC_EPSILON):
    """(value at j+1/2 from the left, value at j-1/2 from the right) of cell j."""
    monotone = (up1 - u0) * (u0 - um1) > 0.0
    u_min = np.minimum(um1, up1)
    u_span = np.maximum(um1, up1) - u_min
    theta = np.sign(up1 - um1)
    tanh_beta = np.tanh(beta)

    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        c = (u0 - u_min + eps) / (u_span + eps)
        b = np.exp(theta * beta * (2.0 * c - 1.0))
        a = (b / np.cosh(beta) - 1.0) / tanh_beta
        face_plus = u_min + 0.5 * u_span * (1.0 + theta * (tanh_beta + a) / (1.0 + a * tanh_beta))
        face_minus = u_min + 0.5 * u_span * (1.0 + theta * a)

    return np.where(monotone, face_plus, u0), np.where(monotone, face_minus, u0)


def thinc(stencil, beta: float, eps: float = THINC_EPSILON):
    """Interface pair of the middle cell of (u_{j-1}, u_j, u_{j+1})."""
    return thinc_values(*_unpack(stencil, 3), beta, eps)


def thinc_pair(windows: np.ndarray, beta: float, eps: float = THINC_EPSILON):
    # Left state at k belongs to the cell before the interface, right state to the one after
    left, _ = thinc_values(windows[..., 1], windows[..., 2], windows[..., 3], beta, eps)
    _, right = thinc_values(windows[..., 2], windows[..., 3], windows[..., 4], beta, eps)
    return left, right


def reconstruct_thinc(line: LineView, beta: float, eigen: Optional[EigenPair] = None,
                      eps: float = THINC_EPSILON) -> InterfaceStates:
    return reconstruct_windowed(line, lambda w: thinc_pair(w, beta, eps), eigen)
