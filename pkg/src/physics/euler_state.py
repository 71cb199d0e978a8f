"""
Ideal-gas state algebra for the two-dimensional Euler equations.

RESPONSIBILITIES:
=================
- Primitive (rho, u, v, p) <-> conservative (rho, rho*u, rho*v, E) conversions
- Sound speed and Roe averages
- Interface frames and the primitive-variable eigenvector pair used for
  characteristic projection

Every function accepts either the small state dataclasses below or arrays
whose first axis holds the four components; trailing axes are broadcast, so
whole grid lines are converted in one call.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..utils.errors import ConfigurationError, InvalidStateError


@dataclass(frozen=True)
class GasModel:
    """Calorically perfect gas."""

    gamma: float = 1.4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ConfigurationError(f"gamma must exceed 1, got {self.gamma}")


@dataclass(frozen=True)
class PrimitiveState:
    rho: float
    u: float
    v: float
    p: float

    def __array__(self, dtype=None, copy=None):
        return np.array([self.rho, self.u, self.v, self.p], dtype=dtype or float)

    @classmethod
    def from_array(cls, values) -> "PrimitiveState":
        rho, u, v, p = (float(x) for x in np.asarray(values).ravel()[:4])
        return cls(rho, u, v, p)


@dataclass(frozen=True)
class ConservativeState:
    rho: float
    mom_x: float
    mom_y: float
    energy: float

    def __array__(self, dtype=None, copy=None):
        return np.array([self.rho, self.mom_x, self.mom_y, self.energy], dtype=dtype or float)

    @classmethod
    def from_array(cls, values) -> "ConservativeState":
        rho, mx, my, e = (float(x) for x in np.asarray(values).ravel()[:4])
        return cls(rho, mx, my, e)


StateLike = Union[PrimitiveState, ConservativeState, np.ndarray, Sequence[float]]


def _first_bad(mask: np.ndarray) -> dict:
    index = tuple(int(i) for i in np.argwhere(mask)[0]) if mask.ndim else ()
    return {"cell": index} if index else {}


def prim_to_cons(w: StateLike, gas: GasModel):
    """E = p/(gamma-1) + rho(u^2+v^2)/2."""
    if isinstance(w, PrimitiveState):
        return ConservativeState.from_array(prim_to_cons(np.asarray(w), gas))
    w = np.asarray(w, dtype=float)
    rho, u, v, p = w[0], w[1], w[2], w[3]
    energy = p / (gas.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    return np.stack([rho, rho * u, rho * v, energy])


def cons_to_prim(q: StateLike, gas: GasModel, location: Optional[dict] = None):
    """
    Invert prim_to_cons.

    Raises:
        InvalidStateError: Non-positive density or pressure, or non-finite input.
            The location carries the first offending index plus ``location``.
    """
    if isinstance(q, ConservativeState):
        return PrimitiveState.from_array(cons_to_prim(np.asarray(q), gas, location))
    q = np.asarray(q, dtype=float)
    rho = q[0]
    bad_rho = ~(rho > 0.0)
    if np.any(bad_rho):
        raise InvalidStateError(
            "Non-positive density", {**_first_bad(bad_rho), **(location or {})}
        )
    u = q[1] / rho
    v = q[2] / rho
    p = (gas.gamma - 1.0) * (q[3] - 0.5 * rho * (u * u + v * v))
    bad_p = ~(p > 0.0)
    if np.any(bad_p):
        raise InvalidStateError(
            "Non-positive pressure", {**_first_bad(bad_p), **(location or {})}
        )
    return np.stack([rho, u, v, p])


def sound_speed(w: StateLike, gas: GasModel):
    """c = sqrt(gamma p / rho)."""
    w = np.asarray(w, dtype=float)
    return np.sqrt(gas.gamma * w[3] / w[0])


def normal_velocity(w: np.ndarray, normal: Tuple[float, float]):
    return w[1] * normal[0] + w[2] * normal[1]


def tangent_of(normal: Tuple[float, float]) -> Tuple[float, float]:
    """(l_x, l_y) = (-n_y, n_x)."""
    return (-normal[1], normal[0])


@dataclass(frozen=True)
class InterfaceFrame:
    """
    Frozen state and orientation for characteristic projection at interfaces.

    Fields may be scalars or arrays (one entry per interface).
    """

    normal: Tuple[float, float]
    rho: np.ndarray
    u: np.ndarray
    v: np.ndarray
    p: np.ndarray
    c: np.ndarray

    @property
    def tangent(self) -> Tuple[float, float]:
        return tangent_of(self.normal)

    @property
    def state(self) -> np.ndarray:
        return np.stack([np.asarray(x, dtype=float) for x in (self.rho, self.u, self.v, self.p)])

    def left_eigenvectors(self) -> np.ndarray:
        """L_n with shape (4, 4, *frame_shape)."""
        nx, ny = self.normal
        lx, ly = self.tangent
        rho = np.asarray(self.rho, dtype=float)
        c = np.asarray(self.c, dtype=float)
        zero = np.zeros_like(rho)
        one = np.ones_like(rho)
        half_rho_c = 0.5 * rho / c
        inv_2c2 = 0.5 / (c * c)
        return np.array([
            [zero, -nx * half_rho_c, -ny * half_rho_c, inv_2c2],
            [one, zero, zero, -2.0 * inv_2c2],
            [zero, nx * half_rho_c, ny * half_rho_c, inv_2c2],
            [zero, rho * lx, rho * ly, zero],
        ])

    def right_eigenvectors(self) -> np.ndarray:
        """R_n with shape (4, 4, *frame_shape); inverse of left_eigenvectors."""
        nx, ny = self.normal
        lx, ly = self.tangent
        rho = np.asarray(self.rho, dtype=float)
        c = np.asarray(self.c, dtype=float)
        zero = np.zeros_like(rho)
        one = np.ones_like(rho)
        c_rho = c / rho
        return np.array([
            [one, one, one, zero],
            [-nx * c_rho, zero, nx * c_rho, lx / rho],
            [-ny * c_rho, zero, ny * c_rho, ly / rho],
            [c * c, zero, c * c, zero],
        ])


def interface_frame(w_left: StateLike, w_right: StateLike,
                    normal: Tuple[float, float], gas: GasModel) -> InterfaceFrame:
    """
    Frame frozen at the arithmetic mean of the two adjacent primitive states.

    Raises:
        InvalidStateError: If the mean state has non-positive density or pressure
    """
    mean = 0.5 * (np.asarray(w_left, dtype=float) + np.asarray(w_right, dtype=float))
    bad = ~((mean[0] > 0.0) & (mean[3] > 0.0))
    if np.any(bad):
        raise InvalidStateError("Invalid interface mean state", _first_bad(bad))
    c = sound_speed(mean, gas)
    return InterfaceFrame(tuple(float(n) for n in normal), mean[0], mean[1], mean[2], mean[3], c)


def to_characteristic(w: StateLike, frame: InterfaceFrame) -> np.ndarray:
    """W = L_n w, broadcasting over any trailing axes shared with the frame."""
    return np.einsum("ij...,j...->i...", frame.left_eigenvectors(), np.asarray(w, dtype=float))


def from_characteristic(W, frame: InterfaceFrame) -> np.ndarray:
    """w = R_n W."""
    return np.einsum("ij...,j...->i...", frame.right_eigenvectors(), np.asarray(W, dtype=float))


def roe_average(w_left: StateLike, w_right: StateLike, gas: GasModel,
                normal: Tuple[float, float] = (1.0, 0.0)):
    """
    Roe-averaged normal velocity and sound speed.

    Returns:
        tuple: (u_tilde_n, c_tilde)

    Raises:
        InvalidStateError: Negative radicand in the averaged sound speed
    """
    wl = np.asarray(w_left, dtype=float)
    wr = np.asarray(w_right, dtype=float)
    sl, sr = np.sqrt(wl[0]), np.sqrt(wr[0])
    weight_l = sl / (sl + sr)
    weight_r = 1.0 - weight_l

    g1 = gas.gamma - 1.0
    h_l = (wl[3] / g1 + 0.5 * wl[0] * (wl[1] ** 2 + wl[2] ** 2) + wl[3]) / wl[0]
    h_r = (wr[3] / g1 + 0.5 * wr[0] * (wr[1] ** 2 + wr[2] ** 2) + wr[3]) / wr[0]

    u = weight_l * wl[1] + weight_r * wr[1]
    v = weight_l * wl[2] + weight_r * wr[2]
    h = weight_l * h_l + weight_r * h_r
    radicand = g1 * (h - 0.5 * (u * u + v * v))
    bad = ~(radicand > 0.0)
    if np.any(bad):
        raise InvalidStateError("Negative Roe sound-speed radicand", _first_bad(bad))
    return u * normal[0] + v * normal[1], np.sqrt(radicand)
