"""
Boundary conditions realized through ghost cells.

Each condition fills the ghost layers of one side of one axis. Conditions that
prescribe a state receive it in primitive variables; ``BoundarySpec.to_stored``
maps primitive arrays (component axis first) onto the stored variables.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..utils.errors import ConfigurationError
from .field import CellField

LOW, HIGH = "low", "high"


class BoundaryCondition(ABC):
    """Fills the ghost cells of one side."""

    @abstractmethod
    def fill(self, view: np.ndarray, side: str, ctx: "FillContext"):
        """
        Populate ghosts in ``view`` (the padded array with the filled axis moved last).

        Args:
            view: Writable view, shape (n_comp, [other axis,] padded length)
            side: LOW or HIGH
            ctx: Geometry and time of the fill
        """

    @property
    def is_periodic(self) -> bool:
        return False


@dataclass(frozen=True)
class FillContext:
    n_ghost: int
    n_cells: int
    normal_component: Optional[int]     # stored component flipped by walls
    along: Optional[np.ndarray]         # padded centers of the other axis (2D only)
    t: float
    to_stored: Callable[[np.ndarray], np.ndarray]

    def ghosts(self, side: str) -> slice:
        g, n = self.n_ghost, self.n_cells
        return slice(0, g) if side == LOW else slice(g + n, g + n + g)


class Periodic(BoundaryCondition):
    @property
    def is_periodic(self) -> bool:
        return True

    def fill(self, view, side, ctx):
        g, n = ctx.n_ghost, ctx.n_cells
        if side == LOW:
            view[..., :g] = view[..., n:n + g]
        else:
            view[..., g + n:] = view[..., g:2 * g]

    def __repr__(self):
        return "Periodic()"


class ZeroGradient(BoundaryCondition):
    def fill(self, view, side, ctx):
        g, n = ctx.n_ghost, ctx.n_cells
        if side == LOW:
            view[..., :g] = view[..., g:g + 1]
        else:
            view[..., g + n:] = view[..., g + n - 1:g + n]

    def __repr__(self):
        return "ZeroGradient()"


class Reflective(BoundaryCondition):
    """Mirror image across the wall with the wall-normal velocity negated."""

    def fill(self, view, side, ctx):
        g, n = ctx.n_ghost, ctx.n_cells
        if side == LOW:
            view[..., :g] = view[..., 2 * g - 1:g - 1:-1]
        else:
            view[..., g + n:] = view[..., g + n - 1:n - 1:-1]
        if ctx.normal_component is not None:
            view[ctx.normal_component, ..., ctx.ghosts(side)] *= -1.0

    def __repr__(self):
        return "Reflective()"


class FixedState(BoundaryCondition):
    """Every ghost cell on the side holds one prescribed primitive state."""

    def __init__(self, state: Sequence[float]):
        self.state = np.asarray(state, dtype=float)

    def fill(self, view, side, ctx):
        stored = np.asarray(ctx.to_stored(self.state[:, np.newaxis]))[:, 0]
        shape = (stored.size,) + (1,) * (view.ndim - 1)
        view[..., ctx.ghosts(side)] = stored.reshape(shape)

    def __repr__(self):
        return f"FixedState({self.state.tolist()})"


class TimeDependent(BoundaryCondition):
    """
    Ghost states from a callback ``(coordinate, t) -> primitive states``.

    In 2D the coordinate is the padded center array of the tangential axis and
    the callback returns shape (n_comp, len(coordinate)); in 1D the coordinate
    is None and the callback returns (n_comp,).
    """

    def __init__(self, callback: Callable):
        self.callback = callback

    def fill(self, view, side, ctx):
        prim = np.asarray(self.callback(ctx.along, ctx.t), dtype=float)
        if prim.ndim == 1:
            prim = prim[:, np.newaxis]
        stored = np.asarray(ctx.to_stored(prim))
        if ctx.along is None:
            stored = stored[:, 0]
            view[..., ctx.ghosts(side)] = stored.reshape((stored.size,) + (1,) * (view.ndim - 1))
        else:
            view[..., ctx.ghosts(side)] = stored[:, :, np.newaxis]

    def __repr__(self):
        return f"TimeDependent({getattr(self.callback, '__name__', 'callback')})"


class SplitCondition(BoundaryCondition):
    """Uses ``below`` where the tangential coordinate is < split, ``above`` elsewhere (2D only)."""

    def __init__(self, split: float, below: BoundaryCondition, above: BoundaryCondition):
        if below.is_periodic or above.is_periodic:
            raise ConfigurationError("Periodic conditions cannot be split along a side")
        self.split = float(split)
        self.below = below
        self.above = above

    def fill(self, view, side, ctx):
        if ctx.along is None:
            raise ConfigurationError("SplitCondition needs a tangential axis")
        ghosts = ctx.ghosts(side)
        self.below.fill(view, side, ctx)
        saved = view[..., ghosts].copy()
        self.above.fill(view, side, ctx)
        mask = (ctx.along < self.split)[np.newaxis, :, np.newaxis]
        view[..., ghosts] = np.where(mask, saved, view[..., ghosts])

    def __repr__(self):
        return f"SplitCondition({self.split}, {self.below!r}, {self.above!r})"


def _identity(prim: np.ndarray) -> np.ndarray:
    return prim


@dataclass(frozen=True)
class BoundarySpec:
    """
    Conditions for every side of a grid.

    Periodic must be given on both opposing sides or on neither; y sides are
    required exactly when the grid is two-dimensional.
    """

    x_low: BoundaryCondition
    x_high: BoundaryCondition
    y_low: Optional[BoundaryCondition] = None
    y_high: Optional[BoundaryCondition] = None
    to_stored: Callable[[np.ndarray], np.ndarray] = _identity

    def __post_init__(self):
        self._check_pair(self.x_low, self.x_high, "x")
        if (self.y_low is None) != (self.y_high is None):
            raise ConfigurationError("Both y sides must be given, or neither")
        if self.y_low is not None:
            self._check_pair(self.y_low, self.y_high, "y")

    @staticmethod
    def _check_pair(low, high, axis_name):
        if low.is_periodic != high.is_periodic:
            raise ConfigurationError(
                f"Periodic condition on {axis_name} must be set on both sides"
            )

    @classmethod
    def uniform(cls, condition_factory: Callable[[], BoundaryCondition], ndim: int,
                to_stored: Callable = _identity) -> "BoundarySpec":
        """Same condition type on every side."""
        sides = [condition_factory() for _ in range(2 * ndim)]
        return cls(*sides, to_stored=to_stored)

    def sides(self, axis: int):
        return (self.x_low, self.x_high) if axis == 0 else (self.y_low, self.y_high)

    def is_periodic(self, axis: int) -> bool:
        return self.sides(axis)[0].is_periodic


def apply_boundaries(data: np.ndarray, bc: BoundarySpec, grid, t: float = 0.0) -> np.ndarray:
    """
    Fill ghost cells of ``data`` in place: x sides first, then y sides.

    Returns:
        np.ndarray: The same array, for chaining
    """
    if grid.ndim == 2 and bc.y_low is None:
        raise ConfigurationError("Two-dimensional grid needs y boundary conditions")
    if grid.ndim == 1 and bc.y_low is not None:
        raise ConfigurationError("One-dimensional grid cannot take y boundary conditions")

    n_comp = data.shape[0]
    for axis, axis_grid in enumerate(grid.axes):
        view = np.moveaxis(data, axis + 1, -1)
        along = None
        if grid.ndim == 2:
            along = grid.axes[1 - axis].padded_centers
        ctx = FillContext(
            n_ghost=axis_grid.n_ghost,
            n_cells=axis_grid.n_cells,
            normal_component=(axis + 1) if n_comp > 1 else None,
            along=along,
            t=t,
            to_stored=bc.to_stored,
        )
        low, high = bc.sides(axis)
        low.fill(view, LOW, ctx)
        high.fill(view, HIGH, ctx)
    return data


def fill_ghosts(field: CellField, bc: BoundarySpec, grid=None, t: float = 0.0) -> CellField:
    """Return a copy of ``field`` with all ghost cells populated at time t."""
    data = field.data.copy()
    apply_boundaries(data, bc, grid or field.grid, t)
    return CellField(data, field.grid)
