"""
Interface numerical fluxes for the Euler equations.

States are primitive arrays (4, ...) and fluxes come back as (4, ...) arrays in
the lab frame: (mass, x-momentum, y-momentum, energy) through a face with unit
normal ``normal``.
"""

from typing import Tuple

import numpy as np

from .euler_state import GasModel, normal_velocity, prim_to_cons, roe_average, sound_speed, tangent_of


def physical_flux(w, normal: Tuple[float, float], gas: GasModel) -> np.ndarray:
    """F = (rho u_n, rho u_n u + p n_x, rho u_n v + p n_y, (E + p) u_n)."""
    w = np.asarray(w, dtype=float)
    rho, u, v, p = w
    un = normal_velocity(w, normal)
    energy = p / (gas.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    mass = rho * un
    return np.stack([
        mass,
        mass * u + p * normal[0],
        mass * v + p * normal[1],
        (energy + p) * un,
    ])


def wave_speeds(w_left, w_right, normal, gas):
    """
    Signal speeds (S_L, S_star, S_R) from Roe-averaged Einfeldt bounds.

    S_L = min(u_nL - c_L, u~_n - c~), S_R = max(u_nR + c_R, u~_n + c~), and
    S_star from the closed form of the contact speed.
    """
    wl = np.asarray(w_left, dtype=float)
    wr = np.asarray(w_right, dtype=float)
    un_l = normal_velocity(wl, normal)
    un_r = normal_velocity(wr, normal)
    c_l = sound_speed(wl, gas)
    c_r = sound_speed(wr, gas)
    un_roe, c_roe = roe_average(wl, wr, gas, normal)

    s_left = np.minimum(un_l - c_l, un_roe - c_roe)
    s_right = np.maximum(un_r + c_r, un_roe + c_roe)

    rho_l, p_l = wl[0], wl[3]
    rho_r, p_r = wr[0], wr[3]
    numerator = p_r - p_l + rho_l * un_l * (s_left - un_l) - rho_r * un_r * (s_right - un_r)
    denominator = rho_l * (s_left - un_l) - rho_r * (s_right - un_r)
    s_star = numerator / denominator
    return s_left, s_star, s_right


def _star_state(w, q, s_k, s_star, normal, gas):
    """Conservative HLLC star state on one side, rotated back to the lab frame."""
    rho, _, _, p = w
    un = normal_velocity(w, normal)
    lx, ly = tangent_of(normal)
    ut = w[1] * lx + w[2] * ly
    factor = rho * (s_k - un) / (s_k - s_star)
    energy = q[3] / rho + (s_star - un) * (s_star + p / (rho * (s_k - un)))
    mom_n = factor * s_star
    mom_t = factor * ut
    return np.stack([
        factor,
        mom_n * normal[0] + mom_t * lx,
        mom_n * normal[1] + mom_t * ly,
        factor * energy,
    ])


def hllc_flux(w_left, w_right, normal: Tuple[float, float], gas: GasModel) -> np.ndarray:
    """
    HLLC flux with four-branch selection on the signs of (S_L, S_star, S_R).

    The tangential velocity of each side is carried unchanged into its star state.
    """
    wl = np.asarray(w_left, dtype=float)
    wr = np.asarray(w_right, dtype=float)
    s_left, s_star, s_right = wave_speeds(wl, wr, normal, gas)

    q_l = prim_to_cons(wl, gas)
    q_r = prim_to_cons(wr, gas)
    f_l = physical_flux(wl, normal, gas)
    f_r = physical_flux(wr, normal, gas)

    with np.errstate(divide="ignore", invalid="ignore"):
        f_star_l = f_l + s_left * (_star_state(wl, q_l, s_left, s_star, normal, gas) - q_l)
        f_star_r = f_r + s_right * (_star_state(wr, q_r, s_right, s_star, normal, gas) - q_r)

    return np.where(
        s_left >= 0.0, f_l,
        np.where(s_star >= 0.0, f_star_l,
                 np.where(s_right > 0.0, f_star_r, f_r)),
    )


def glf_flux(w_left, w_right, normal: Tuple[float, float], gas: GasModel,
             alpha_global: float) -> np.ndarray:
    """Global Lax-Friedrichs: 1/2 (F_L + F_R) - 1/2 alpha_global (Q_R - Q_L)."""
    wl = np.asarray(w_left, dtype=float)
    wr = np.asarray(w_right, dtype=float)
    f_l = physical_flux(wl, normal, gas)
    f_r = physical_flux(wr, normal, gas)
    q_l = prim_to_cons(wl, gas)
    q_r = prim_to_cons(wr, gas)
    return 0.5 * (f_l + f_r) - 0.5 * alpha_global * (q_r - q_l)


def max_signal_speed(w, normal: Tuple[float, float], gas: GasModel):
    """|u_n| + c per cell."""
    w = np.asarray(w, dtype=float)
    return np.abs(normal_velocity(w, normal)) + sound_speed(w, gas)
