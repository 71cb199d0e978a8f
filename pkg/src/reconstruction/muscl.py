"""Third-order MUSCL reconstruction with minmod-limited slopes."""

from typing import Optional

from ..config.settings import MUSCL_ETA, MUSCL_OMEGA
from .linear import _unpack, minmod
from .stencils import EigenPair, InterfaceStates, LineView, reconstruct_windowed


def muscl_values(um1, u0, up1, up2, eta=MUSCL_ETA, omega=MUSCL_OMEGA):
    """(L, R) at j+1/2 from u_{j-1}, u_j, u_{j+1}, u_{j+2}."""
    d_minus = u0 - um1        # j-1/2
    d_center = up1 - u0       # j+1/2
    d_plus = up2 - up1        # j+3/2

    left = u0 + 0.25 * ((1.0 - eta) * minmod(d_minus, omega * d_center)
                        + (1.0 + eta) * minmod(d_center, omega * d_minus))
    right = up1 - 0.25 * ((1.0 - eta) * minmod(d_plus, omega * d_center)
                          + (1.0 + eta) * minmod(d_center, omega * d_plus))
    return left, right


def muscl_tvd(stencil, eta: float = MUSCL_ETA, omega: float = MUSCL_OMEGA):
    """Interface pair at j+1/2 from the four cells u_{j-1}..u_{j+2}."""
    return muscl_values(*_unpack(stencil, 4), eta, omega)


def reconstruct_muscl(line: LineView, eigen: Optional[EigenPair] = None,
                      eta: float = MUSCL_ETA, omega: float = MUSCL_OMEGA) -> InterfaceStates:
    return reconstruct_windowed(
        line,
        lambda w: muscl_values(w[..., 1], w[..., 2], w[..., 3], w[..., 4], eta, omega),
        eigen,
    )
