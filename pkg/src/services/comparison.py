"""
Scheme comparison on one case: one row per scheme for a chosen metric.

Metrics:
    l1_vs_reference        mean |rho - rho_ref|
    l2_vs_reference        sqrt(mean (rho - rho_ref)^2)
    extrema_count          number of interior local extrema of rho
    oscillation_amplitude  max - min of rho over a window [lo, hi]
    slice                  the density line itself (written as CSV, no scalar)
"""

from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..cases import CaseSpec, reference_solution
from ..utils.errors import ConfigurationError
from ..utils.logger import get_logger
from .output_writer import write_table
from .reports import ComparisonRow
from .simulation import SimulationService

METRICS = ("l1_vs_reference", "l2_vs_reference", "extrema_count", "slice", "oscillation_amplitude")


def _line(values: np.ndarray) -> np.ndarray:
    """1D data as is; 2D data along x through the middle row."""
    return values if values.ndim == 1 else values[:, values.shape[1] // 2]


def extrema_count(values: np.ndarray, tolerance: float = 1e-12) -> int:
    line = _line(values)
    left = line[1:-1] - line[:-2]
    right = line[2:] - line[1:-1]
    return int(np.count_nonzero(left * right < -tolerance))


def oscillation_amplitude(values: np.ndarray, coords: np.ndarray,
                          window: Tuple[float, float]) -> float:
    line = _line(values)
    inside = (coords >= window[0]) & (coords <= window[1])
    if not np.any(inside):
        raise ConfigurationError(f"Window {window} contains no cells")
    return float(line[inside].max() - line[inside].min())


class ComparisonService:
    """Runs the same case with several schemes and tabulates one metric."""

    def __init__(self, simulation: Optional[SimulationService] = None):
        self.simulation = simulation or SimulationService()
        self.logger = get_logger()

    def compare(self, case: CaseSpec, configs: Sequence, metric: str,
                window: Optional[Tuple[float, float]] = None,
                output: Optional[Path] = None) -> List[ComparisonRow]:
        if metric not in METRICS:
            raise ConfigurationError(f"Unknown metric: {metric}. Choose one of: {', '.join(METRICS)}")
        if metric == "oscillation_amplitude" and window is None:
            raise ConfigurationError("oscillation_amplitude needs a window lo,hi")

        reference = None
        rows: List[ComparisonRow] = []
        slices = {}
        for config in configs:
            result = self.simulation.run(case, config)
            density = result.primitive[0]
            grid = result.state.grid
            row = ComparisonRow(scheme=config.scheme, metric=metric)

            if metric in ("l1_vs_reference", "l2_vs_reference"):
                if reference is None:
                    reference = reference_solution(case, grid)[0]
                diff = density - reference
                row.value = float(np.mean(np.abs(diff)) if metric == "l1_vs_reference"
                                  else np.sqrt(np.mean(diff ** 2)))
            elif metric == "extrema_count":
                row.value = float(extrema_count(density))
            elif metric == "oscillation_amplitude":
                row.value = oscillation_amplitude(density, grid.axes[0].centers, window)
            else:
                slices.setdefault("x", grid.axes[0].centers)
                slices[config.scheme] = _line(density)

            row.extra = {"steps": float(result.history.steps),
                         "max_drift": result.report.max_drift}
            rows.append(row)
            self.logger.debug(f"{case.name} {config.scheme}: {metric} = {row.value}")

        if output is not None:
            if metric == "slice":
                write_table(output, [dict(zip(slices, values)) for values in zip(*slices.values())])
            else:
                write_table(output, [{"scheme": r.scheme, "metric": r.metric, "value": r.value, **r.extra}
                                     for r in rows])
        return rows
