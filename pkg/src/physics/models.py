"""
Conservation laws the solver can integrate.

DESIGN PATTERNS:
================
1. STRATEGY PATTERN - The integrator talks to a ConservationLaw and never
   branches on scalar vs system
2. TEMPLATE METHOD - Subclasses supply conversions, fluxes and eigenvectors

Axis convention: axis 0 is x (normal (1, 0)), axis 1 is y (normal (0, 1)).
"""

from abc import ABC, abstractmethod
from typing import Optional, Tuple

import numpy as np

from ..utils.errors import ConfigurationError, InvalidStateError
from .euler_state import GasModel, cons_to_prim, interface_frame, prim_to_cons
from .riemann_flux import glf_flux, hllc_flux, max_signal_speed, physical_flux

NORMALS = ((1.0, 0.0), (0.0, 1.0))


class ConservationLaw(ABC):
    """Base class for hyperbolic systems in primitive/conservative form."""

    n_comp: int = 1
    name: str = "law"
    has_characteristics: bool = False

    @staticmethod
    def normal(axis: int) -> Tuple[float, float]:
        return NORMALS[axis]

    @abstractmethod
    def to_primitive(self, q: np.ndarray, location: Optional[dict] = None) -> np.ndarray:
        """Stored variables to the variables that get reconstructed."""

    @abstractmethod
    def to_conservative(self, w: np.ndarray) -> np.ndarray:
        """Reconstructed variables back to stored variables."""

    @abstractmethod
    def flux(self, w: np.ndarray, axis: int) -> np.ndarray:
        """Physical flux through a face normal to ``axis``."""

    @abstractmethod
    def riemann_flux(self, w_left: np.ndarray, w_right: np.ndarray, axis: int,
                     solver: str, alpha_global: float) -> np.ndarray:
        """Numerical flux from interface states."""

    @abstractmethod
    def signal_speed(self, w: np.ndarray, axis: int) -> np.ndarray:
        """Largest characteristic speed magnitude per cell along ``axis``."""

    def eigen_pair(self, w_left: np.ndarray, w_right: np.ndarray, axis: int):
        """
        Left/right eigenvector matrices frozen at each interface.

        Returns:
            tuple | None: (L, R) each shaped (n_comp, n_comp, *interfaces), or
            None when the law has no characteristic decomposition
        """
        return None

    def check_interface_states(self, w: np.ndarray, location: Optional[dict] = None):
        """Raise InvalidStateError if reconstructed states are unusable."""
        bad = ~np.isfinite(w).all(axis=0)
        if np.any(bad):
            index = tuple(int(i) for i in np.argwhere(bad)[0])
            raise InvalidStateError("Non-finite interface state",
                                    {"interface": index, **(location or {})})

    def wall_component(self, axis: int) -> Optional[int]:
        """Stored component negated by a wall normal to ``axis``."""
        return None


class LinearAdvection(ConservationLaw):
    """u_t + a . grad(u) = 0 with constant velocity."""

    n_comp = 1
    name = "advection"

    def __init__(self, velocity: Tuple[float, float] = (1.0, 0.0)):
        self.velocity = tuple(float(a) for a in velocity)

    def to_primitive(self, q, location=None):
        return q

    def to_conservative(self, w):
        return w

    def flux(self, w, axis):
        return self.velocity[axis] * w

    def riemann_flux(self, w_left, w_right, axis, solver, alpha_global):
        a = self.velocity[axis]
        if solver == "GLF":
            alpha = max(alpha_global, abs(a))
            return 0.5 * a * (w_left + w_right) - 0.5 * alpha * (w_right - w_left)
        # The exact Riemann solution of linear advection is the upwind flux
        return a * (w_left if a >= 0.0 else w_right)

    def signal_speed(self, w, axis):
        return np.full(np.shape(w)[1:], abs(self.velocity[axis]))

    def __repr__(self):
        return f"LinearAdvection(velocity={self.velocity})"


class EulerEquations(ConservationLaw):
    """Two-dimensional Euler equations; one-dimensional problems keep v = 0."""

    n_comp = 4
    name = "euler"
    has_characteristics = True

    def __init__(self, gas: GasModel):
        self.gas = gas

    def to_primitive(self, q, location=None):
        return cons_to_prim(q, self.gas, location)

    def to_conservative(self, w):
        return prim_to_cons(w, self.gas)

    def flux(self, w, axis):
        return physical_flux(w, self.normal(axis), self.gas)

    def riemann_flux(self, w_left, w_right, axis, solver, alpha_global):
        normal = self.normal(axis)
        if solver == "HLLC":
            return hllc_flux(w_left, w_right, normal, self.gas)
        if solver == "GLF":
            return glf_flux(w_left, w_right, normal, self.gas, alpha_global)
        raise ConfigurationError(f"Unknown Riemann solver: {solver}")

    def signal_speed(self, w, axis):
        return max_signal_speed(w, self.normal(axis), self.gas)

    def eigen_pair(self, w_left, w_right, axis):
        frame = interface_frame(w_left, w_right, self.normal(axis), self.gas)
        return frame.left_eigenvectors(), frame.right_eigenvectors()

    def check_interface_states(self, w, location=None):
        super().check_interface_states(w, location)
        bad = ~((w[0] > 0.0) & (w[3] > 0.0))
        if np.any(bad):
            index = tuple(int(i) for i in np.argwhere(bad)[0])
            raise InvalidStateError("Non-positive reconstructed density or pressure",
                                    {"interface": index, **(location or {})})

    def wall_component(self, axis):
        return axis + 1

    def __repr__(self):
        return f"EulerEquations(gamma={self.gas.gamma})"
