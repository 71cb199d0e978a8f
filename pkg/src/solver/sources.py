"""Source terms added to the flux residual."""

from typing import Callable, Optional

import numpy as np

from ..utils.errors import ConfigurationError

# callback(primitive interior values, grid, t) -> per-component source
SourceCallback = Callable[[np.ndarray, object, float], np.ndarray]


class SourceTerm:
    """A pointwise source S(w, x, t) evaluated at cell centers."""

    def __init__(self, callback: SourceCallback, name: str = "source"):
        if not callable(callback):
            raise ConfigurationError("Source callback must be callable")
        self.callback = callback
        self.name = name

    def __call__(self, prim: np.ndarray, grid, t: float = 0.0) -> np.ndarray:
        values = np.asarray(self.callback(prim, grid, t), dtype=float)
        if values.shape != prim.shape:
            raise ConfigurationError(
                f"Source '{self.name}' returned shape {values.shape}, expected {prim.shape}"
            )
        return values

    def __repr__(self):
        return f"SourceTerm({self.name})"


def _gravity(prim, grid, t):
    rho, v = prim[0], prim[2]
    return np.stack([np.zeros_like(rho), np.zeros_like(rho), rho, rho * v])


def gravity() -> SourceTerm:
    """Unit gravity along +y acting on momentum and energy: S = (0, 0, rho, rho v)."""
    return SourceTerm(_gravity, "gravity")


def apply_source(residual: np.ndarray, prim: np.ndarray, source: Optional[SourceTerm],
                 grid=None, t: float = 0.0) -> np.ndarray:
    """Return ``residual`` with the source added; unchanged when there is none."""
    if source is None:
        return residual
    return residual + source(prim, grid, t)
