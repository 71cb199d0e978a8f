"""
Reference solutions for accuracy and comparison metrics.

All references are primitive cell values on the requested grid, shape
(n_comp, *grid.shape).
"""

from functools import lru_cache
from typing import Optional

import numpy as np

from ..physics import GasModel, exact_riemann
from ..solver import SchemeConfig, SemiDiscretization, integrate
from ..utils.errors import ConfigurationError, UnsupportedCaseError
from ..utils.logger import log_operation
from .library import CASES, CaseSpec, instantiate_case

REFERENCE_SCHEME = "WENO_Z"


def restrict(values: np.ndarray, fine_grid, coarse_grid) -> np.ndarray:
    """
    Fine cell values onto a coarser grid.

    Block averages when every axis refines by an integer ratio; otherwise linear
    interpolation of cell-centre values (1D only).
    """
    ratios = [f.n_cells / c.n_cells for f, c in zip(fine_grid.axes, coarse_grid.axes)]
    if all(r >= 1 and float(r).is_integer() for r in ratios):
        r = [int(x) for x in ratios]
        n_comp = values.shape[0]
        if coarse_grid.ndim == 1:
            return values.reshape(n_comp, coarse_grid.n_cells, r[0]).mean(axis=-1)
        nx, ny = coarse_grid.shape
        return values.reshape(n_comp, nx, r[0], ny, r[1]).mean(axis=(2, 4))
    if coarse_grid.ndim != 1:
        raise ConfigurationError("Non-integer refinement ratios are only supported in 1D")
    fine_x, coarse_x = fine_grid.centers, coarse_grid.centers
    return np.stack([np.interp(coarse_x, fine_x, component) for component in values])


def fine_grid_solution(case: CaseSpec, scheme: str = REFERENCE_SCHEME) -> tuple:
    """
    Run ``scheme`` on the case's fine reference grid; returns (primitive values, grid).

    Catalog cases are cached by name, final time, knobs and scheme.
    """
    if case.reference.fine_cells is None:
        raise UnsupportedCaseError(f"{case.name} has no fine-grid reference")
    key = _cache_key(case)
    if key is None:
        return _run_fine_grid(case, scheme)
    values, grid = _cached_fine_grid(*key, scheme)
    return values.copy(), grid


def _cache_key(case: CaseSpec):
    if case.name not in CASES:
        return None
    knobs = tuple(sorted(case.knobs.items()))
    try:
        hash(knobs)
    except TypeError:
        return None
    return case.name, case.t_end, knobs


@lru_cache(maxsize=8)
def _cached_fine_grid(name: str, t_end: float, knobs: tuple, scheme: str) -> tuple:
    return _run_fine_grid(instantiate_case(name, t_end=t_end, **dict(knobs)), scheme)


def _run_fine_grid(case: CaseSpec, scheme: str) -> tuple:
    grid = case.grid(case.reference.fine_cells)
    law = case.law()
    system = SemiDiscretization(law, grid, case.boundary_spec(),
                                SchemeConfig(scheme=scheme, cfl=case.cfl), case.source)
    with log_operation("Fine-grid reference", case=case.name, cells=grid.shape) as op:
        state, history = integrate(case.initial_field(grid), system, law, case.t_end, case.cfl)
        op.success(f"Reference for {case.name} after {history.steps} steps")
    return law.to_primitive(np.array(state.interior)), grid


def reference_solution(case: CaseSpec, grid=None, t: Optional[float] = None) -> np.ndarray:
    """
    Primitive reference values of ``case`` at time t (default t_end) on ``grid``.

    Raises:
        UnsupportedCaseError: The case has no reference recipe
    """
    grid = grid or case.grid()
    t = case.t_end if t is None else t
    recipe = case.reference

    if recipe.kind == "analytic":
        values = np.asarray(recipe.exact(t, *grid.mesh()), dtype=float)
        return values[np.newaxis] if values.ndim == grid.ndim else values

    if recipe.kind == "riemann":
        left, right = recipe.states
        if t <= 0:
            return case.initial_primitive(grid)
        xi = (grid.centers - recipe.split) / t
        return exact_riemann(left, right, GasModel(case.gamma), xi)

    if recipe.kind == "fine_grid":
        if t != case.t_end:
            raise UnsupportedCaseError("Fine-grid references exist only at t_end")
        values, fine_grid = fine_grid_solution(case)
        return restrict(values, fine_grid, grid)

    raise UnsupportedCaseError(f"{case.name} has no reference solution")
