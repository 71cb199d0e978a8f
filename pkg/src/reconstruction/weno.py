"""Fifth-order WENO-Z reconstruction."""

from typing import Optional

import numpy as np

from ..config.settings import WENOZ_EPSILON, WENOZ_POWER
from .linear import _unpack
from .stencils import EigenPair, InterfaceStates, LineView, reconstruct_windowed

IDEAL_WEIGHTS = (0.1, 0.6, 0.3)


def substencil_values(um2, um1, u0, up1, up2):
    """Third-order values at j+1/2 from the three sub-stencils."""
    p0 = (2.0 * um2 - 7.0 * um1 + 11.0 * u0) / 6.0
    p1 = (-um1 + 5.0 * u0 + 2.0 * up1) / 6.0
    p2 = (2.0 * u0 + 5.0 * up1 - up2) / 6.0
    return p0, p1, p2


def smoothness_indicators(um2, um1, u0, up1, up2):
    """Jiang-Shu beta_k."""
    b0 = 13.0 / 12.0 * (um2 - 2.0 * um1 + u0) ** 2 + 0.25 * (um2 - 4.0 * um1 + 3.0 * u0) ** 2
    b1 = 13.0 / 12.0 * (um1 - 2.0 * u0 + up1) ** 2 + 0.25 * (um1 - up1) ** 2
    b2 = 13.0 / 12.0 * (u0 - 2.0 * up1 + up2) ** 2 + 0.25 * (3.0 * u0 - 4.0 * up1 + up2) ** 2
    return b0, b1, b2


def wenoz_weights(um2, um1, u0, up1, up2, eps=WENOZ_EPSILON, power=WENOZ_POWER):
    betas = smoothness_indicators(um2, um1, u0, up1, up2)
    tau5 = np.abs(betas[0] - betas[2])
    alphas = [d * (1.0 + (tau5 / (b + eps)) ** power) for d, b in zip(IDEAL_WEIGHTS, betas)]
    total = alphas[0] + alphas[1] + alphas[2]
    return tuple(a / total for a in alphas)


def wenoz_values(um2, um1, u0, up1, up2, eps=WENOZ_EPSILON, power=WENOZ_POWER):
    p = substencil_values(um2, um1, u0, up1, up2)
    w = wenoz_weights(um2, um1, u0, up1, up2, eps, power)
    return w[0] * p[0] + w[1] * p[1] + w[2] * p[2]


def weno_z(stencil, eps: float = WENOZ_EPSILON, power: int = WENOZ_POWER):
    """WENO-Z value at j+1/2 (last axis holds u_{j-2}..u_{j+2})."""
    return wenoz_values(*_unpack(stencil, 5), eps, power)


def wenoz_pair(windows: np.ndarray):
    w = [windows[..., i] for i in range(6)]
    return wenoz_values(w[0], w[1], w[2], w[3], w[4]), wenoz_values(w[5], w[4], w[3], w[2], w[1])


def reconstruct_wenoz(line: LineView, eigen: Optional[EigenPair] = None) -> InterfaceStates:
    return reconstruct_windowed(line, wenoz_pair, eigen)
