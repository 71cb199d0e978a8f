"""
Explicit five-point reconstruction and the MP5 limiter.

Stencil arguments are ordered upwind to downwind: (u_{j-2}, u_{j-1}, u_j,
u_{j+1}, u_{j+2}) gives the value at j+1/2 seen from cell j. Right states use
the same functions on the mirrored stencil.
"""

from typing import Optional

import numpy as np

from ..config.settings import ALPHA_DEFAULTS, MP5_EPSILON
from .stencils import EigenPair, InterfaceStates, LineView, reconstruct_windowed


def minmod(a, b):
    """1/2 (sign a + sign b) min(|a|, |b|)."""
    return 0.5 * (np.sign(a) + np.sign(b)) * np.minimum(np.abs(a), np.abs(b))


def minmod4(w, x, y, z):
    s = 0.125 * (np.sign(w) + np.sign(x)) * np.abs((np.sign(w) + np.sign(y)) * (np.sign(w) + np.sign(z)))
    return s * np.minimum(np.minimum(np.abs(w), np.abs(x)), np.minimum(np.abs(y), np.abs(z)))


def _unpack(stencil, width):
    stencil = np.asarray(stencil, dtype=float)
    if stencil.shape[-1] != width:
        raise ValueError(f"Expected a {width}-point stencil, got shape {stencil.shape}")
    return [stencil[..., i] for i in range(width)]


def linear5_values(um2, um1, u0, up1, up2):
    return (2.0 * um2 - 13.0 * um1 + 47.0 * u0 + 27.0 * up1 - 3.0 * up2) / 60.0


def linear5(stencil):
    """Fifth-order upwind-biased value at j+1/2 (last axis holds the 5 cells)."""
    return linear5_values(*_unpack(stencil, 5))


def mp5_values(um2, um1, u0, up1, up2, alpha: float, eps: float = MP5_EPSILON):
    """Limited value at j+1/2 from five stencil arrays."""
    value = linear5_values(um2, um1, u0, up1, up2)
    u_mp = u0 + minmod(up1 - u0, alpha * (u0 - um1))
    keep = (value - u0) * (value - u_mp) <= eps

    d_minus = um2 - 2.0 * um1 + u0
    d_zero = um1 - 2.0 * u0 + up1
    d_plus = u0 - 2.0 * up1 + up2
    dm4_plus = minmod4(4.0 * d_zero - d_plus, 4.0 * d_plus - d_zero, d_zero, d_plus)
    dm4_minus = minmod4(4.0 * d_zero - d_minus, 4.0 * d_minus - d_zero, d_zero, d_minus)

    u_ul = u0 + alpha * (u0 - um1)
    u_av = 0.5 * (u0 + up1)
    u_md = u_av - 0.5 * dm4_plus
    u_lc = u0 + 0.5 * (u0 - um1) + (4.0 / 3.0) * dm4_minus

    u_min = np.maximum(np.minimum(np.minimum(u0, up1), u_md),
                       np.minimum(np.minimum(u0, u_ul), u_lc))
    u_max = np.minimum(np.maximum(np.maximum(u0, up1), u_md),
                       np.maximum(np.maximum(u0, u_ul), u_lc))
    limited = value + minmod(u_min - value, u_max - value)
    return np.where(keep, value, limited)


def mp5_limit(stencil, alpha: float = ALPHA_DEFAULTS["MP5"], eps: float = MP5_EPSILON):
    """
    Monotonicity-preserving value at j+1/2.

    Returns the unlimited five-point value when (P5 - u_j)(P5 - U_MP) <= eps,
    otherwise the value clipped into [U_min, U_max].
    """
    return mp5_values(*_unpack(stencil, 5), alpha, eps)


def mp5_pair(windows: np.ndarray, alpha: float, eps: float = MP5_EPSILON):
    """(left, right) MP5 values for every window."""
    w = [windows[..., i] for i in range(6)]
    left = mp5_values(w[0], w[1], w[2], w[3], w[4], alpha, eps)
    right = mp5_values(w[5], w[4], w[3], w[2], w[1], alpha, eps)
    return left, right


def linear5_pair(windows: np.ndarray):
    w = [windows[..., i] for i in range(6)]
    return linear5_values(w[0], w[1], w[2], w[3], w[4]), linear5_values(w[5], w[4], w[3], w[2], w[1])


def reconstruct_mp5(line: LineView, alpha: float = ALPHA_DEFAULTS["MP5"],
                    eigen: Optional[EigenPair] = None, eps: float = MP5_EPSILON) -> InterfaceStates:
    """MP5 left/right states at every interface of the line."""
    return reconstruct_windowed(line, lambda win: mp5_pair(win, alpha, eps), eigen)


def reconstruct_linear5(line: LineView) -> InterfaceStates:
    """Unlimited upwind-biased five-point states."""
    return reconstruct_windowed(line, linear5_pair)


def reconstruct_e6(line: LineView) -> InterfaceStates:
    """Explicit sixth-order central states: mean of the two biased five-point values."""
    states = reconstruct_linear5(line)
    return InterfaceStates.central(0.5 * (states.left + states.right))
