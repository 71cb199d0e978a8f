"""
Uniform Cartesian grids with ghost layers.

Array layout used throughout the package: component axis first, then x, then y.
Cell j (1-based, j = 1..n_cells) lives at padded index j - 1 + n_ghost.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config.settings import N_GHOST
from ..utils.errors import ConfigurationError


@dataclass(frozen=True)
class Grid1D:
    """One uniform axis: n_cells interior cells on [x_min, x_max]."""

    x_min: float
    x_max: float
    n_cells: int
    n_ghost: int = N_GHOST

    def __post_init__(self):
        if self.n_cells <= 0:
            raise ConfigurationError(f"n_cells must be positive, got {self.n_cells}")
        if not self.x_max > self.x_min:
            raise ConfigurationError(
                f"Empty axis: x_min={self.x_min} must be below x_max={self.x_max}"
            )
        if self.n_ghost < N_GHOST:
            raise ConfigurationError(
                f"At least {N_GHOST} ghost layers are required, got {self.n_ghost}"
            )
        if self.n_cells < self.n_ghost:
            raise ConfigurationError(
                f"Axis needs at least {self.n_ghost} cells, got {self.n_cells}"
            )

    ndim = 1

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def padded_size(self) -> int:
        return self.n_cells + 2 * self.n_ghost

    @property
    def interior(self) -> slice:
        """Slice selecting interior cells in a padded array."""
        return slice(self.n_ghost, self.n_ghost + self.n_cells)

    @property
    def centers(self) -> np.ndarray:
        """x_j = x_min + (j - 1/2) dx for j = 1..n_cells."""
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx

    @property
    def padded_centers(self) -> np.ndarray:
        """Cell centers including ghost cells on both sides."""
        j = np.arange(self.padded_size) - self.n_ghost
        return self.x_min + (j + 0.5) * self.dx

    @property
    def interfaces(self) -> np.ndarray:
        """x_{j+1/2} = x_min + j dx for j = 0..n_cells."""
        return self.x_min + np.arange(self.n_cells + 1) * self.dx

    # Uniform protocol shared with Grid2D
    @property
    def axes(self) -> Tuple["Grid1D", ...]:
        return (self,)

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.n_cells,)

    @property
    def padded_shape(self) -> Tuple[int, ...]:
        return (self.padded_size,)

    @property
    def cell_volume(self) -> float:
        return self.dx

    @property
    def interior_index(self) -> Tuple[slice, ...]:
        return (slice(None), self.interior)

    def mesh(self) -> Tuple[np.ndarray, ...]:
        """Interior cell-center coordinates, one array per axis."""
        return (self.centers,)

    def refined(self, factor: int) -> "Grid1D":
        return Grid1D(self.x_min, self.x_max, self.n_cells * factor, self.n_ghost)


@dataclass(frozen=True)
class Grid2D:
    """Tensor product of two independent axes (x along array axis 1, y along axis 2)."""

    x: Grid1D
    y: Grid1D

    def __post_init__(self):
        if self.x.n_ghost != self.y.n_ghost:
            raise ConfigurationError("Both axes must use the same ghost width")

    ndim = 2

    @classmethod
    def from_extents(cls, x_range, y_range, nx: int, ny: int, n_ghost: int = N_GHOST):
        return cls(
            Grid1D(float(x_range[0]), float(x_range[1]), int(nx), n_ghost),
            Grid1D(float(y_range[0]), float(y_range[1]), int(ny), n_ghost),
        )

    @property
    def n_ghost(self) -> int:
        return self.x.n_ghost

    @property
    def dx(self) -> float:
        return self.x.dx

    @property
    def dy(self) -> float:
        return self.y.dx

    @property
    def axes(self) -> Tuple[Grid1D, ...]:
        return (self.x, self.y)

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.x.n_cells, self.y.n_cells)

    @property
    def padded_shape(self) -> Tuple[int, ...]:
        return (self.x.padded_size, self.y.padded_size)

    @property
    def cell_volume(self) -> float:
        return self.x.dx * self.y.dx

    @property
    def interior_index(self) -> Tuple[slice, ...]:
        return (slice(None), self.x.interior, self.y.interior)

    def mesh(self) -> Tuple[np.ndarray, ...]:
        return tuple(np.meshgrid(self.x.centers, self.y.centers, indexing="ij"))

    def refined(self, factor: int) -> "Grid2D":
        return Grid2D(self.x.refined(factor), self.y.refined(factor))
