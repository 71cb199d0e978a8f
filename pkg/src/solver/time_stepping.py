"""
Third-order TVD Runge-Kutta stepping and time-step control.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from ..config.settings import CONVERGENCE_DT_FACTOR, MAX_STEPS, PROGRESS_LOG_EVERY
from ..mesh import CellField
from ..physics import ConservationLaw
from ..utils.errors import ConfigurationError, InvalidStateError
from ..utils.logger import get_logger, log_operation

logger = get_logger()

Residual = Callable[[CellField, float], np.ndarray]


def rk3_step(state: CellField, dt: float, rhs: Residual, t: float = 0.0) -> CellField:
    """
    One TVD-RK3 step:
        Q1   = Q + dt R(Q)
        Q2   = 3/4 Q + 1/4 Q1 + 1/4 dt R(Q1)
        Q^n+1 = 1/3 Q + 2/3 Q2 + 2/3 dt R(Q2)
    """
    if not dt > 0.0:
        raise ConfigurationError(f"Time step must be positive, got {dt}")
    q0 = np.array(state.interior)
    q1 = q0 + dt * rhs(state, t)
    stage = state.with_interior(q1)
    q2 = 0.75 * q0 + 0.25 * q1 + 0.25 * dt * rhs(stage, t + dt)
    stage = state.with_interior(q2)
    q3 = q0 / 3.0 + 2.0 / 3.0 * q2 + 2.0 / 3.0 * dt * rhs(stage, t + 0.5 * dt)
    return state.with_interior(q3)


def compute_dt(state: CellField, law: ConservationLaw, cfl: float) -> float:
    """cfl times the smallest dx_d / (|u_n| + c) over cells and directions."""
    prim = law.to_primitive(np.array(state.interior))
    grid = state.grid
    ratios = []
    for axis, axis_grid in enumerate(grid.axes):
        speed = float(np.max(law.signal_speed(prim, axis)))
        if speed > 0.0:
            ratios.append(axis_grid.dx / speed)
    if not ratios or not np.isfinite(min(ratios)):
        raise InvalidStateError("No finite signal speed to bound the time step")
    return cfl * min(ratios)


def convergence_dt(grid) -> float:
    """dt = 0.1 dx^2, small enough that time error stays below space error."""
    return CONVERGENCE_DT_FACTOR * min(axis.dx for axis in grid.axes) ** 2


@dataclass
class RunHistory:
    """What the time loop did."""

    steps: int = 0
    t: float = 0.0
    dt_min: float = float("inf")
    dt_max: float = 0.0
    triggered: List[int] = field(default_factory=list)

    def record(self, dt: float, triggered: int):
        self.steps += 1
        self.t += dt
        self.dt_min = min(self.dt_min, dt)
        self.dt_max = max(self.dt_max, dt)
        self.triggered.append(triggered)


def integrate(state: CellField, rhs, law: ConservationLaw, t_end: float, cfl: float,
              fixed_dt: Optional[float] = None, t_start: float = 0.0,
              max_steps: int = MAX_STEPS,
              on_step: Optional[Callable[[CellField, RunHistory], None]] = None):
    """
    Advance ``state`` from t_start to t_end; the last step is clipped to land on t_end.

    Args:
        rhs: Residual callable; if it exposes ``last_triggered`` the count is recorded
        fixed_dt: Constant step (accuracy studies); CFL-controlled when None

    Returns:
        tuple: (final CellField, RunHistory)

    Raises:
        InvalidStateError: Non-physical state, with the time at which it appeared
    """
    if t_end < t_start:
        raise ConfigurationError(f"t_end ({t_end}) precedes t_start ({t_start})")
    history = RunHistory(t=t_start)

    with log_operation("Time integration", t_end=t_end, cfl=cfl) as op:
        while history.t < t_end:
            if history.steps >= max_steps:
                raise InvalidStateError("Step limit reached before t_end",
                                        {"t": history.t, "steps": history.steps})
            dt = fixed_dt if fixed_dt is not None else compute_dt(state, law, cfl)
            dt = min(dt, t_end - history.t)
            try:
                state = rk3_step(state, dt, rhs, history.t)
                state.check_finite(history.t + dt)
            except InvalidStateError as exc:
                raise exc.with_context(t=history.t, step=history.steps) from exc
            history.record(dt, getattr(rhs, "last_triggered", 0))
            if history.t > t_end - 1e-14 * max(1.0, abs(t_end)):
                history.t = t_end

            if history.steps % PROGRESS_LOG_EVERY == 0:
                op.debug(f"step {history.steps}: t={history.t:.6g} dt={dt:.3e}")
            if on_step is not None:
                on_step(state, history)

        op.success(f"Reached t={history.t:.6g} in {history.steps} steps")
    return state, history
