"""
Exact solution of the one-dimensional Riemann problem for an ideal gas.

Used as a reference for shock-tube cases. The star pressure is found by a
damped Newton iteration on the pressure function; the similarity solution is
then sampled at xi = (x - x0)/t for every wave pattern.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..config.settings import EXACT_RIEMANN_MAX_ITER, EXACT_RIEMANN_TOLERANCE
from ..utils.errors import InvalidStateError, UnsupportedCaseError
from .euler_state import GasModel


def _side_function(p, rho, p_k, c_k, gamma):
    """Pressure function f_K(p) and its derivative for one side."""
    if p <= p_k:
        ratio = p / p_k
        f = 2.0 * c_k / (gamma - 1.0) * (ratio ** ((gamma - 1.0) / (2.0 * gamma)) - 1.0)
        df = ratio ** (-(gamma + 1.0) / (2.0 * gamma)) / (rho * c_k)
    else:
        a = 2.0 / ((gamma + 1.0) * rho)
        b = (gamma - 1.0) / (gamma + 1.0) * p_k
        root = math.sqrt(a / (p + b))
        f = (p - p_k) * root
        df = (1.0 - 0.5 * (p - p_k) / (p + b)) * root
    return f, df


@dataclass(frozen=True)
class RiemannSolution:
    """Star-region values plus the data needed for sampling."""

    left: tuple      # (rho, u, v, p)
    right: tuple
    gamma: float
    p_star: float
    u_star: float
    residual: float
    iterations: int

    def sample(self, xi) -> np.ndarray:
        """
        Primitive states (rho, u, v, p) at similarity coordinates xi = x/t.

        Returns:
            np.ndarray: shape (4, len(xi))
        """
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        g = self.gamma
        rho_l, u_l, v_l, p_l = self.left
        rho_r, u_r, v_r, p_r = self.right
        c_l = math.sqrt(g * p_l / rho_l)
        c_r = math.sqrt(g * p_r / rho_r)
        ps, us = self.p_star, self.u_star
        gm = (g - 1.0) / (g + 1.0)

        rho = np.empty_like(xi)
        u = np.empty_like(xi)
        v = np.where(xi < us, v_l, v_r)
        p = np.empty_like(xi)

        left_side = xi < us
        # Left wave
        if ps > p_l:
            s_shock = u_l - c_l * math.sqrt((g + 1.0) / (2.0 * g) * ps / p_l + (g - 1.0) / (2.0 * g))
            rho_star = rho_l * (ps / p_l + gm) / (gm * ps / p_l + 1.0)
            outer = left_side & (xi < s_shock)
            star = left_side & ~outer
            fan = np.zeros_like(left_side)
        else:
            rho_star = rho_l * (ps / p_l) ** (1.0 / g)
            c_star = c_l * (ps / p_l) ** ((g - 1.0) / (2.0 * g))
            head, tail = u_l - c_l, us - c_star
            outer = left_side & (xi < head)
            fan = left_side & (xi >= head) & (xi < tail)
            star = left_side & (xi >= tail)
        rho[outer], u[outer], p[outer] = rho_l, u_l, p_l
        rho[star], u[star], p[star] = rho_star, us, ps
        if fan.any():
            base = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * c_l) * (u_l - xi[fan])
            rho[fan] = rho_l * base ** (2.0 / (g - 1.0))
            u[fan] = 2.0 / (g + 1.0) * (c_l + 0.5 * (g - 1.0) * u_l + xi[fan])
            p[fan] = p_l * base ** (2.0 * g / (g - 1.0))

        right_side = ~left_side
        # Right wave
        if ps > p_r:
            s_shock = u_r + c_r * math.sqrt((g + 1.0) / (2.0 * g) * ps / p_r + (g - 1.0) / (2.0 * g))
            rho_star = rho_r * (ps / p_r + gm) / (gm * ps / p_r + 1.0)
            outer = right_side & (xi >= s_shock)
            star = right_side & ~outer
            fan = np.zeros_like(right_side)
        else:
            rho_star = rho_r * (ps / p_r) ** (1.0 / g)
            c_star = c_r * (ps / p_r) ** ((g - 1.0) / (2.0 * g))
            head, tail = u_r + c_r, us + c_star
            outer = right_side & (xi >= head)
            fan = right_side & (xi < head) & (xi >= tail)
            star = right_side & (xi < tail)
        rho[outer], u[outer], p[outer] = rho_r, u_r, p_r
        rho[star], u[star], p[star] = rho_star, us, ps
        if fan.any():
            base = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * c_r) * (u_r - xi[fan])
            rho[fan] = rho_r * base ** (2.0 / (g - 1.0))
            u[fan] = 2.0 / (g + 1.0) * (-c_r + 0.5 * (g - 1.0) * u_r + xi[fan])
            p[fan] = p_r * base ** (2.0 * g / (g - 1.0))

        return np.stack([rho, u, v, p])


def solve_riemann(w_left, w_right, gas: GasModel,
                  tolerance: float = EXACT_RIEMANN_TOLERANCE,
                  max_iter: int = EXACT_RIEMANN_MAX_ITER) -> RiemannSolution:
    """
    Solve for the star state between two primitive states (normal velocity in u).

    Raises:
        UnsupportedCaseError: The data generate vacuum
        InvalidStateError: Invalid input states or no convergence
    """
    rho_l, u_l, v_l, p_l = (float(x) for x in np.asarray(w_left, dtype=float)[:4])
    rho_r, u_r, v_r, p_r = (float(x) for x in np.asarray(w_right, dtype=float)[:4])
    if min(rho_l, rho_r, p_l, p_r) <= 0.0:
        raise InvalidStateError("Exact Riemann solver needs positive density and pressure")

    g = gas.gamma
    c_l = math.sqrt(g * p_l / rho_l)
    c_r = math.sqrt(g * p_r / rho_r)
    du = u_r - u_l
    if 2.0 * (c_l + c_r) / (g - 1.0) <= du:
        raise UnsupportedCaseError("Riemann data generate vacuum")

    # Primitive-variable guess, floored away from zero
    p = max(0.5 * (p_l + p_r) - 0.125 * du * (rho_l + rho_r) * (c_l + c_r),
            tolerance * min(p_l, p_r))

    iterations = 0
    for iterations in range(1, max_iter + 1):
        f_l, df_l = _side_function(p, rho_l, p_l, c_l, g)
        f_r, df_r = _side_function(p, rho_r, p_r, c_r, g)
        f = f_l + f_r + du
        p_new = p - f / (df_l + df_r)
        if p_new <= 0.0:
            p_new = 0.5 * p
        change = 2.0 * abs(p_new - p) / (p_new + p)
        p = p_new
        if change < tolerance:
            break
    else:
        raise InvalidStateError("Exact Riemann iteration did not converge",
                                {"iterations": max_iter})

    f_l, _ = _side_function(p, rho_l, p_l, c_l, g)
    f_r, _ = _side_function(p, rho_r, p_r, c_r, g)
    residual = abs(f_l + f_r + du)
    u_star = 0.5 * (u_l + u_r) + 0.5 * (f_r - f_l)
    return RiemannSolution(
        left=(rho_l, u_l, v_l, p_l),
        right=(rho_r, u_r, v_r, p_r),
        gamma=g,
        p_star=p,
        u_star=u_star,
        residual=residual,
        iterations=iterations,
    )


def exact_riemann(w_left, w_right, gas: GasModel, xi) -> np.ndarray:
    """Sampled primitive states (4, len(xi)) of the exact solution at xi = x/t."""
    return solve_riemann(w_left, w_right, gas).sample(xi)
