"""
Line views, interface-state containers and stencil windows.

Interface k (k = 0..N) separates padded cells g+k-1 and g+k. Its window holds
the six padded cells g+k-3 .. g+k+2, so window positions 2 and 3 are the two
cells adjacent to the interface. Every kernel in this package maps windows
(..., N+1, 6) onto interface values (..., N+1).
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..config.settings import N_GHOST
from ..utils.errors import ConfigurationError

WINDOW = 6


@dataclass(frozen=True)
class LineView:
    """
    Cell averages along grid lines, ghosts included, on the last axis.

    Leading axes (components, other lines) are carried through every kernel.
    ``periodic`` lines share their first and last interface across the seam.
    """

    values: np.ndarray
    n_ghost: int = N_GHOST
    periodic: bool = False

    def __post_init__(self):
        if self.values.shape[-1] < 2 * self.n_ghost + 1:
            raise ConfigurationError("Line is shorter than its ghost layers")
        if self.n_ghost < N_GHOST:
            raise ConfigurationError(f"Lines need {N_GHOST} ghost cells per side")

    @property
    def n_cells(self) -> int:
        return self.values.shape[-1] - 2 * self.n_ghost

    @property
    def n_interfaces(self) -> int:
        return self.n_cells + 1

    @property
    def interior(self) -> np.ndarray:
        return self.values[..., self.n_ghost:self.n_ghost + self.n_cells]

    def windows(self) -> np.ndarray:
        """Six-cell windows, shape (..., N+1, 6)."""
        start = self.n_ghost - 3
        view = sliding_window_view(self.values, WINDOW, axis=-1)
        return view[..., start:start + self.n_interfaces, :]

    def adjacent(self) -> Tuple[np.ndarray, np.ndarray]:
        """Values of the cells left and right of every interface."""
        g, n = self.n_ghost, self.n_cells
        return self.values[..., g - 1:g + n], self.values[..., g:g + n + 1]


@dataclass
class InterfaceStates:
    """
    Left/right reconstructed values at interfaces 0..N.

    ``triggered`` optionally marks cells (shape (..., N)) where a selection
    replaced the baseline candidate.
    """

    left: np.ndarray
    right: np.ndarray
    triggered: Optional[np.ndarray] = field(default=None, compare=False)

    @classmethod
    def central(cls, values: np.ndarray) -> "InterfaceStates":
        return cls(values, values.copy())

    @property
    def n_cells(self) -> int:
        return self.left.shape[-1] - 1

    @property
    def jump(self) -> np.ndarray:
        """|L - R| at every interface."""
        return np.abs(self.left - self.right)

    @property
    def dissipation(self) -> np.ndarray:
        """R - L, the jump the Riemann solver dissipates."""
        return self.right - self.left

    def copy(self) -> "InterfaceStates":
        mask = None if self.triggered is None else self.triggered.copy()
        return InterfaceStates(self.left.copy(), self.right.copy(), mask)

    def triggered_count(self) -> int:
        return 0 if self.triggered is None else int(np.count_nonzero(self.triggered))


EigenPair = Tuple[np.ndarray, np.ndarray]


def project_windows(windows: np.ndarray, left_vectors: np.ndarray) -> np.ndarray:
    """Apply the per-interface left eigenvectors to every cell of each window."""
    return np.einsum("ij...,j...w->i...w", left_vectors, windows)


def unproject(values: np.ndarray, right_vectors: np.ndarray) -> np.ndarray:
    return np.einsum("ij...,j...->i...", right_vectors, values)


def reconstruct_windowed(line: LineView,
                         kernel: Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]],
                         eigen: Optional[EigenPair] = None) -> InterfaceStates:
    """
    Run a window kernel over a line, optionally in characteristic variables.

    With ``eigen`` given, the window of interface k is projected with L_k
    before the kernel and the resulting pair is mapped back with R_k.
    """
    windows = line.windows()
    if eigen is not None:
        left_vectors, right_vectors = eigen
        windows = project_windows(windows, left_vectors)
    left, right = kernel(windows)
    if eigen is not None:
        left = unproject(left, right_vectors)
        right = unproject(right, right_vectors)
    return InterfaceStates(np.ascontiguousarray(left), np.ascontiguousarray(right))
