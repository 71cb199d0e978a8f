"""
Output Writer - CSV, VTK and JSON artifacts of a run.

Formats:
    CSV  header row x[,y],<variables>, one row per cell centre
    VTK  legacy ASCII STRUCTURED_POINTS, one scalar per variable (2D only)
    JSON report.json with the run / study report
"""

import json
from pathlib import Path
from typing import Dict, Optional, Sequence

import numpy as np
import pandas as pd

from ..config.settings import CSV_PRECISION, REPORT_FILENAME
from ..utils.logger import get_logger

logger = get_logger()

EULER_VARIABLES = ("rho", "u", "v", "p")
SCALAR_VARIABLES = ("u",)


def variable_names(n_comp: int, ndim: int) -> Sequence[str]:
    if n_comp == 1:
        return SCALAR_VARIABLES
    # 1D Euler output omits the always-zero v column
    return EULER_VARIABLES if ndim == 2 else ("rho", "u", "p")


def _frame(prim: np.ndarray, grid) -> pd.DataFrame:
    names = variable_names(prim.shape[0], grid.ndim)
    components = prim if prim.shape[0] == 1 or grid.ndim == 2 else prim[[0, 1, 3]]
    columns: Dict[str, np.ndarray] = {}
    for axis_name, coords in zip("xy", grid.mesh()):
        columns[axis_name] = coords.ravel()
    for name, values in zip(names, components):
        columns[name] = values.ravel()
    return pd.DataFrame(columns)


def write_csv(path: Path, prim: np.ndarray, grid) -> Path:
    """Cell-centre primitive values as CSV."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    _frame(prim, grid).to_csv(path, index=False, float_format=f"%.{CSV_PRECISION}g")
    logger.debug(f"Wrote {path}")
    return path


def write_slice(path: Path, prim: np.ndarray, grid, axis: int = 0,
                at: Optional[float] = None) -> Path:
    """
    One grid line of a 2D field: along x (axis=0) at y = ``at`` or along y.

    The line through the cell centre nearest ``at`` is used; the domain
    midline when ``at`` is None.
    """
    other = grid.axes[1 - axis]
    target = 0.5 * (other.x_min + other.x_max) if at is None else at
    index = int(np.argmin(np.abs(other.centers - target)))
    line = prim[:, :, index] if axis == 0 else prim[:, index, :]
    coords = grid.axes[axis].centers
    frame = pd.DataFrame({"xy"[axis]: coords})
    for name, values in zip(variable_names(prim.shape[0], 2), line):
        frame[name] = values
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=f"%.{CSV_PRECISION}g")
    return path


def write_vtk(path: Path, prim: np.ndarray, grid, title: str = "hocus") -> Path:
    """Legacy ASCII STRUCTURED_POINTS with cell data, x varying fastest."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    nx, ny = grid.shape
    names = variable_names(prim.shape[0], 2)
    lines = [
        "# vtk DataFile Version 3.0",
        title,
        "ASCII",
        "DATASET STRUCTURED_POINTS",
        f"DIMENSIONS {nx + 1} {ny + 1} 1",
        f"ORIGIN {grid.x.x_min:.{CSV_PRECISION}g} {grid.y.x_min:.{CSV_PRECISION}g} 0",
        f"SPACING {grid.dx:.{CSV_PRECISION}g} {grid.dy:.{CSV_PRECISION}g} 1",
        f"CELL_DATA {nx * ny}",
    ]
    for name, values in zip(names, prim):
        lines.append(f"SCALARS {name} double 1")
        lines.append("LOOKUP_TABLE default")
        lines.extend(f"{v:.{CSV_PRECISION}g}" for v in values.T.ravel())
    path.write_text("\n".join(lines) + "\n")
    logger.debug(f"Wrote {path}")
    return path


def write_report(directory: Path, report: dict, filename: str = REPORT_FILENAME) -> Path:
    path = Path(directory) / filename
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2)
    return path


def write_table(path: Path, rows: Sequence[dict]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(list(rows)).to_csv(path, index=False, float_format=f"%.{CSV_PRECISION}g")
    return path
