"""
Simulation Service - runs one case with one scheme from t = 0 to t_end.

DESIGN PATTERNS:
================
1. SERVICE LAYER - Commands never touch the solver directly
2. DATA TRANSFER OBJECT - RunResult carries the final state plus its report

The service owns the run's field exclusively, so independent runs can share
nothing but the immutable case catalog (batch mode relies on this).
"""

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from ..cases import CaseSpec
from ..config.settings import DRIFT_ZERO_TOTAL
from ..mesh import CellField
from ..solver import RunHistory, SchemeConfig, SemiDiscretization, convergence_dt, integrate
from ..utils.logger import get_logger, log_operation
from .output_writer import write_csv, write_report, write_slice, write_vtk
from .reports import RunReport


@dataclass
class RunResult:
    """Final state of a run with its primitive values and report."""
    case: CaseSpec
    state: CellField
    primitive: np.ndarray
    history: RunHistory
    report: RunReport


def conservation_drift(initial: np.ndarray, final: np.ndarray,
                       magnitude: Optional[np.ndarray] = None) -> list:
    """
    |Q(t) - Q(0)| / |Q(0)| for every conserved total.

    Totals that are zero (up to DRIFT_ZERO_TOTAL times ``magnitude``, the
    integral of |q|, when given) report the absolute change instead.
    """
    initial = np.asarray(initial, dtype=float)
    change = np.abs(np.asarray(final, dtype=float) - initial)
    scale = np.abs(initial)
    floor = 0.0 if magnitude is None else DRIFT_ZERO_TOTAL * np.asarray(magnitude, dtype=float)
    zero = scale <= floor
    return [float(d) for d in np.where(zero, change, change / np.where(zero, 1.0, scale))]


class SimulationService:
    """
    Builds the semi-discretization of a case and drives the time loop.

    Attributes:
        output_dir: Root directory for artifacts; nothing is written when None
        snapshot_every: Write the field every k steps (0 disables snapshots)
    """

    def __init__(self, output_dir: Optional[Path] = None, snapshot_every: int = 0):
        self.output_dir = Path(output_dir) if output_dir is not None else None
        self.snapshot_every = snapshot_every
        self.logger = get_logger()

    def run(self, case: CaseSpec, config: SchemeConfig,
            cells: Optional[Tuple[int, ...]] = None,
            fixed_dt: bool = False) -> RunResult:
        """
        Run ``case`` to its t_end.

        Args:
            cells: Grid override; the case default when None
            fixed_dt: Use dt = 0.1 dx^2 instead of CFL control (accuracy studies)

        Raises:
            InvalidStateError: The solution became non-physical (cell and time attached)
        """
        grid = case.grid(cells)
        law = case.law()
        system = SemiDiscretization(law, grid, case.boundary_spec(), config, case.source)
        state = case.initial_field(grid)
        initial_totals, magnitudes = state.totals(), state.magnitudes()
        run_dir = self._run_directory(case, config, grid)

        on_step = None
        if run_dir is not None and self.snapshot_every > 0:
            def on_step(current, history):
                if history.steps % self.snapshot_every == 0:
                    self._write_fields(run_dir / f"snapshot_{history.steps:06d}", current, law, grid)

        with log_operation("Run", case=case.name, scheme=config.scheme, cells=grid.shape) as op:
            started = time.perf_counter()
            state, history = integrate(
                state, system, law, case.t_end, config.cfl,
                fixed_dt=convergence_dt(grid) if fixed_dt else None,
                on_step=on_step,
            )
            elapsed = time.perf_counter() - started
            op.success(f"{case.name} reached t={history.t:g} in {history.steps} steps")

        primitive = law.to_primitive(np.array(state.interior))
        report = RunReport(
            case=case.name,
            scheme=config.scheme,
            riemann=config.riemann,
            grid=list(grid.shape),
            cfl=config.cfl,
            t_end=history.t,
            steps=history.steps,
            wall_time=elapsed,
            drift=conservation_drift(initial_totals, state.totals(), magnitudes),
            triggered_last=history.triggered[-1] if history.triggered else 0,
        )
        if run_dir is not None:
            report.outputs = [str(p) for p in self._write_fields(run_dir / "final", state, law, grid)]
            report.outputs.append(str(write_report(run_dir, {
                "run": report.to_dict(), "config": config.to_dict(), "knobs": case.knobs,
            })))
        return RunResult(case, state, primitive, history, report)

    def _run_directory(self, case: CaseSpec, config: SchemeConfig, grid) -> Optional[Path]:
        if self.output_dir is None:
            return None
        cells = "x".join(str(n) for n in grid.shape)
        return self.output_dir / f"{case.name}_{config.scheme.lower()}_{cells}"

    def _write_fields(self, stem: Path, state: CellField, law, grid):
        prim = law.to_primitive(np.array(state.interior))
        written = [write_csv(stem.with_suffix(".csv"), prim, grid)]
        if grid.ndim == 2:
            written.append(write_vtk(stem.with_suffix(".vtk"), prim, grid))
            written.append(write_slice(stem.parent / f"{stem.name}_slice_x.csv", prim, grid, axis=0))
        return written
