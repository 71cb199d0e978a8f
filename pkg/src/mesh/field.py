"""Cell-averaged multi-component fields."""

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from ..utils.errors import ConfigurationError, InvalidStateError
from .grid import Grid1D, Grid2D

Grid = Union[Grid1D, Grid2D]


@dataclass(frozen=True)
class CellField:
    """
    Cell averages of n_comp components over interior and ghost cells.

    ``data`` has shape (n_comp, *grid.padded_shape). Operations return new
    fields; the array held by a field is never written through the public API.
    """

    data: np.ndarray
    grid: Grid

    def __post_init__(self):
        expected = self.grid.padded_shape
        if self.data.ndim != len(expected) + 1 or self.data.shape[1:] != expected:
            raise ConfigurationError(
                f"Field shape {self.data.shape} does not match grid {expected}"
            )

    @classmethod
    def zeros(cls, grid: Grid, n_comp: int) -> "CellField":
        return cls(np.zeros((n_comp, *grid.padded_shape)), grid)

    @classmethod
    def from_interior(cls, grid: Grid, values) -> "CellField":
        """Build a field from interior values; ghost cells start at zero."""
        values = np.asarray(values, dtype=float)
        if values.ndim == grid.ndim:
            values = values[np.newaxis]
        data = np.zeros((values.shape[0], *grid.padded_shape))
        data[grid.interior_index] = values
        return cls(data, grid)

    @property
    def n_comp(self) -> int:
        return self.data.shape[0]

    @property
    def interior(self) -> np.ndarray:
        """Read-only view of the interior cells."""
        view = self.data[self.grid.interior_index]
        view.flags.writeable = False
        return view

    def value(self, component: int, i: int, j: int = None) -> float:
        """Interior value by 0-based cell index."""
        g = self.grid.n_ghost
        if j is None:
            return float(self.data[component, g + i])
        return float(self.data[component, g + i, g + j])

    def with_data(self, data: np.ndarray) -> "CellField":
        return CellField(np.array(data, dtype=float, copy=True), self.grid)

    def with_interior(self, values: np.ndarray) -> "CellField":
        data = self.data.copy()
        data[self.grid.interior_index] = values
        return CellField(data, self.grid)

    def totals(self) -> np.ndarray:
        """Integral of each component over the interior (sum of averages times cell volume)."""
        axes = tuple(range(1, self.data.ndim))
        return self.interior.sum(axis=axes) * self.grid.cell_volume

    def magnitudes(self) -> np.ndarray:
        """Integral of |q| of each component over the interior."""
        axes = tuple(range(1, self.data.ndim))
        return np.abs(self.interior).sum(axis=axes) * self.grid.cell_volume

    def check_finite(self, t: float = None):
        """Raise InvalidStateError naming the first non-finite interior cell."""
        interior = self.interior
        bad = ~np.isfinite(interior)
        if bad.any():
            index = tuple(int(i) for i in np.argwhere(bad)[0])
            location = {"component": index[0], "cell": index[1:]}
            if t is not None:
                location["t"] = t
            raise InvalidStateError("Non-finite value in solution", location)


def l1_error(field: CellField, reference: Callable, grid: Grid = None) -> np.ndarray:
    """
    Per-component L1 error against a pointwise reference.

    The reference is evaluated at interior cell centers, ``reference(x)`` in 1D
    or ``reference(x, y)`` in 2D, and may return either a scalar array or an
    array with a leading component axis.

    Returns:
        np.ndarray: (1/N) * sum |u_j - ref(x_j)| for each component
    """
    grid = grid or field.grid
    expected = np.asarray(reference(*grid.mesh()), dtype=float)
    if expected.ndim == grid.ndim:
        expected = expected[np.newaxis]
    diff = np.abs(field.interior - expected)
    return diff.reshape(field.n_comp, -1).mean(axis=1)
