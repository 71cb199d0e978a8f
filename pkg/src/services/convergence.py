"""
Accuracy studies: L1 error of a smooth case on successively refined grids.
"""

from typing import Iterable, Optional

import numpy as np

from ..cases import CaseSpec, reference_solution
from ..solver import SchemeConfig
from ..utils.errors import UnsupportedCaseError
from ..utils.logger import get_logger, log_operation
from .reports import ConvergenceReport
from .simulation import SimulationService

CONVERGENCE_CASES = ("gaussian_advect", "henrick_critical", "euler2d_smooth")


class ConvergenceStudy:
    """
    Runs a case with dt = 0.1 dx^2 on each grid size and compares the first
    primitive component (u for advection, density for Euler) with the exact
    solution.
    """

    def __init__(self, simulation: Optional[SimulationService] = None, component: int = 0):
        self.simulation = simulation or SimulationService()
        self.component = component
        self.logger = get_logger()

    def run(self, case: CaseSpec, config: SchemeConfig, sizes: Iterable[int]) -> ConvergenceReport:
        if case.reference.kind != "analytic":
            raise UnsupportedCaseError(f"{case.name} has no analytic solution for an accuracy study")

        report = ConvergenceReport(case=case.name, scheme=config.scheme, component=self.component)
        for n in sorted(sizes):
            cells = (n,) * case.ndim
            with log_operation("Convergence level", case=case.name, n=n) as op:
                result = self.simulation.run(case, config, cells=cells, fixed_dt=True)
                grid = result.state.grid
                exact = reference_solution(case, grid)
                error = float(np.mean(np.abs(result.primitive[self.component] - exact[self.component])))
                report.add(n, error, result.history.steps, result.report.triggered_last)
                op.success(f"N={n}: L1 = {error:.3e}")
        return report
