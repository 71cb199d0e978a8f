"""
Report models for runs, accuracy studies and scheme comparisons.
Defines the structure of what the harness writes to report.json.
"""

import math
from dataclasses import asdict, dataclass, field
from datetime import datetime
from typing import Dict, List, Optional


@dataclass
class RunReport:
    """
    Outcome of one case run.

    Attributes:
        case: Case name
        scheme: Reconstruction variant
        riemann: Riemann solver
        grid: Cell counts per direction
        cfl: CFL number used
        t_end: Final time reached
        steps: Number of time steps
        wall_time: Seconds spent in the time loop
        drift: Relative change of each conserved total, |Q(t) - Q(0)| / max(|Q(0)|, 1)
        triggered_last: Cells switched by the BVD selection in the last evaluation
        outputs: Files written for this run
        created_at: ISO timestamp
    """
    case: str
    scheme: str
    riemann: str
    grid: List[int]
    cfl: float
    t_end: float
    steps: int = 0
    wall_time: float = 0.0
    drift: List[float] = field(default_factory=list)
    triggered_last: int = 0
    outputs: List[str] = field(default_factory=list)
    created_at: str = ""

    def __post_init__(self):
        if not self.created_at:
            self.created_at = datetime.now().isoformat(timespec="seconds")

    @property
    def max_drift(self) -> float:
        return max(self.drift) if self.drift else 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self):
        cells = "x".join(str(n) for n in self.grid)
        return (
            f"{self.case} [{self.scheme}/{self.riemann}] on {cells} cells\n"
            f"  t = {self.t_end:g} after {self.steps} steps ({self.wall_time:.2f}s)\n"
            f"  max conservation drift: {self.max_drift:.3e}"
        )


@dataclass
class ConvergenceLevel:
    """One grid of an accuracy study."""
    cells: int
    error: float
    order: Optional[float] = None
    steps: int = 0
    triggered: int = 0


@dataclass
class ConvergenceReport:
    """
    L1 errors on successively refined grids and the observed orders between
    consecutive grids, log2(e_N / e_2N) scaled by the actual refinement ratio.
    """
    case: str
    scheme: str
    component: int = 0
    levels: List[ConvergenceLevel] = field(default_factory=list)

    def add(self, cells: int, error: float, steps: int = 0, triggered: int = 0):
        order = None
        if self.levels:
            previous = self.levels[-1]
            if error > 0.0 and previous.error > 0.0:
                order = math.log(previous.error / error) / math.log(cells / previous.cells)
        self.levels.append(ConvergenceLevel(cells, error, order, steps, triggered))

    @property
    def sizes(self) -> List[int]:
        return [level.cells for level in self.levels]

    @property
    def errors(self) -> List[float]:
        return [level.error for level in self.levels]

    @property
    def orders(self) -> List[Optional[float]]:
        return [level.order for level in self.levels]

    def to_dict(self) -> dict:
        return asdict(self)

    def table(self) -> str:
        lines = [f"{'N':>8}  {'L1 error':>12}  {'order':>6}"]
        for level in self.levels:
            order = f"{level.order:6.2f}" if level.order is not None else "     -"
            lines.append(f"{level.cells:>8}  {level.error:12.3e}  {order}")
        return "\n".join(lines)


@dataclass
class ComparisonRow:
    """One scheme's value of a comparison metric."""
    scheme: str
    metric: str
    value: Optional[float] = None
    extra: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)
