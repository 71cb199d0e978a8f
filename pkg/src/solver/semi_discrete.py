"""
Semi-discrete finite-volume residual, assembled one direction at a time.

Per direction:
    1. Stored variables -> primitive variables (ghosts included)
    2. Candidate reconstructions along every grid line
    3. BVD selection on primitive interface values (BVD variants only)
    4. Riemann flux and flux difference
"""

from typing import Optional

import numpy as np

from ..bvd import CandidateSet, select
from ..mesh import BoundarySpec, CellField, apply_boundaries
from ..physics import ConservationLaw
from ..reconstruction import (
    InterfaceStates,
    LineView,
    average_c6,
    reconstruct_c5,
    reconstruct_e6,
    reconstruct_mp5,
    reconstruct_muscl,
    reconstruct_thinc,
    reconstruct_wenoz,
)
from ..utils.errors import ConfigurationError, InvalidStateError
from ..utils.logger import get_logger
from .config import SchemeConfig
from .sources import SourceTerm, apply_source

logger = get_logger()


def _c5_pair(line: LineView, config: SchemeConfig, eigen=None,
             closure: Optional[InterfaceStates] = None) -> InterfaceStates:
    return reconstruct_c5(line, closure, alpha=config.mp5_alpha,
                          backend=config.c5_backend, eigen=eigen)


def build_candidates(line: LineView, config: SchemeConfig, eigen=None) -> CandidateSet:
    """Reconstruct every candidate ``config.scheme`` needs on one bundle of lines."""
    scheme = config.scheme
    candidates = CandidateSet(line=line)
    if scheme in ("HOCUS5", "HOCUS6", "HOCUS6_EXTRA"):
        candidates.mp5 = reconstruct_mp5(line, config.mp5_alpha, eigen)
    candidates.c5 = _c5_pair(line, config, eigen, closure=candidates.mp5)
    if scheme != "C5T2":
        candidates.c6 = average_c6(candidates.c5)

    if scheme == "HOCUS_TVD":
        candidates.muscl = reconstruct_muscl(line, eigen)
    elif scheme == "C5T2":
        candidates.thinc_stage1 = reconstruct_thinc(line, config.beta_stage1, eigen)
        candidates.thinc_stage2 = reconstruct_thinc(line, config.beta_stage2, eigen)
    elif scheme == "HOCUS_WENOZ":
        candidates.wenoz = reconstruct_wenoz(line, eigen)
    return candidates


def reconstruct_line(line: LineView, config: SchemeConfig, eigen=None) -> InterfaceStates:
    """Final interface states of one bundle of lines for the configured variant."""
    scheme = config.scheme
    if scheme == "MP5":
        return reconstruct_mp5(line, config.mp5_alpha, eigen)
    if scheme == "WENO_Z":
        return reconstruct_wenoz(line, eigen)
    if scheme == "C5":
        return _c5_pair(line, config)
    if scheme == "C6":
        return average_c6(_c5_pair(line, config))
    if scheme == "E6":
        return reconstruct_e6(line)
    return select(build_candidates(line, config, eigen), config.policy())


class SemiDiscretization:
    """
    Residual R(Q, t) = -sum_d (F_{k+1} - F_k)/dx_d + S for one problem setup.

    Attributes:
        last_triggered: Cells where a BVD selection replaced the baseline in
            the most recent evaluation, summed over directions
    """

    def __init__(self, law: ConservationLaw, grid, bc: BoundarySpec, config: SchemeConfig,
                 source: Optional[SourceTerm] = None):
        self.law = law
        self.grid = grid
        self.bc = bc
        self.config = config
        self.source = source
        self.last_triggered = 0
        self._project = config.uses_projection(law.has_characteristics)

    @property
    def projects(self) -> bool:
        return self._project

    def fill(self, field: CellField, t: float) -> np.ndarray:
        data = field.data.copy()
        return apply_boundaries(data, self.bc, self.grid, t)

    def __call__(self, field: CellField, t: float = 0.0) -> np.ndarray:
        """Interior residual, shape (n_comp, *grid.shape)."""
        data = self.fill(field, t)
        prim = self.law.to_primitive(data, {"t": t})
        residual = np.zeros((field.n_comp, *self.grid.shape))
        self.last_triggered = 0
        for axis in range(self.grid.ndim):
            residual += self.sweep(prim, axis, t)
        return apply_source(residual, prim[self.grid.interior_index], self.source, self.grid, t)

    def _lines(self, prim: np.ndarray, axis: int) -> np.ndarray:
        """Primitive values with ``axis`` last; the other direction cut to interior lines."""
        lines = np.moveaxis(prim, axis + 1, -1)
        if self.grid.ndim == 2:
            other = self.grid.axes[1 - axis]
            lines = lines[:, other.interior, :]
        return np.ascontiguousarray(lines)

    def interface_states(self, prim: np.ndarray, axis: int) -> InterfaceStates:
        line = LineView(self._lines(prim, axis), self.grid.n_ghost,
                        periodic=self.bc.is_periodic(axis))
        eigen = None
        if self._project:
            eigen = self.law.eigen_pair(*line.adjacent(), axis)
        return reconstruct_line(line, self.config, eigen)

    def sweep(self, prim: np.ndarray, axis: int, t: float) -> np.ndarray:
        """Flux-difference contribution of one direction, in interior layout."""
        location = {"axis": "xy"[axis], "t": t}
        try:
            states = self.interface_states(prim, axis)
            self.law.check_interface_states(states.left, location)
            self.law.check_interface_states(states.right, location)
        except InvalidStateError:
            logger.debug(f"Reconstruction failed along {location['axis']} at t={t:.6g}")
            raise
        self.last_triggered += states.triggered_count()

        alpha_global = 0.0
        if self.config.riemann == "GLF":
            alpha_global = float(np.max(self.law.signal_speed(prim, axis)))
        flux = self.law.riemann_flux(states.left, states.right, axis,
                                     self.config.riemann, alpha_global)
        if not np.all(np.isfinite(flux)):
            bad = tuple(int(i) for i in np.argwhere(~np.isfinite(flux))[0])
            raise InvalidStateError("Non-finite interface flux", {**location, "interface": bad})

        dx = self.grid.axes[axis].dx
        contribution = -(flux[..., 1:] - flux[..., :-1]) / dx
        if self.grid.ndim == 2 and axis == 0:
            contribution = np.moveaxis(contribution, -1, 1)
        return contribution


def rhs_1d(field: CellField, grid, bc: BoundarySpec, config: SchemeConfig,
           law: ConservationLaw, t: float = 0.0) -> np.ndarray:
    """Residual of a one-dimensional field."""
    if grid.ndim != 1:
        raise ConfigurationError("rhs_1d needs a one-dimensional grid")
    return SemiDiscretization(law, grid, bc, config)(field, t)


def rhs_2d(field: CellField, grid, bc: BoundarySpec, config: SchemeConfig,
           law: ConservationLaw, t: float = 0.0) -> np.ndarray:
    """Residual of a two-dimensional field: x sweeps over rows plus y sweeps over columns."""
    if grid.ndim != 2:
        raise ConfigurationError("rhs_2d needs a two-dimensional grid")
    return SemiDiscretization(law, grid, bc, config)(field, t)
