"""
Boundary-variation-diminishing selection between candidate reconstructions.

Interface arrays carry components on axis 0 whenever they have more than one
axis; a cell triggers if the selection criterion holds for any component.
Triggers are collected over all cells before any interface is overwritten.
"""

from dataclasses import dataclass, fields
from typing import Iterable, Optional

import numpy as np

from ..config.settings import (
    ALPHA_DEFAULTS,
    ALPHA_FALLBACK,
    THINC_BETA_STAGE1,
    THINC_BETA_STAGE2,
    TBV_RATIO_GUARD,
    WENOZ_SMOOTHNESS_THRESHOLD,
)
from ..reconstruction.stencils import InterfaceStates, LineView
from ..utils.errors import ConfigurationError

BVD_VARIANTS = ("HOCUS5", "HOCUS6", "HOCUS_TVD", "C5T2", "HOCUS_WENOZ", "HOCUS6_EXTRA")

# Interface offsets (relative to a cell's own left face) rewritten when it triggers
FOUR_INTERFACES = (-1, 0, 1, 2)
OWN_INTERFACES = (0, 1)


@dataclass
class CandidateSet:
    """Interface states of every candidate a variant compares, indexed 0..N."""

    c5: Optional[InterfaceStates] = None
    c6: Optional[InterfaceStates] = None
    mp5: Optional[InterfaceStates] = None
    muscl: Optional[InterfaceStates] = None
    thinc_stage1: Optional[InterfaceStates] = None
    thinc_stage2: Optional[InterfaceStates] = None
    wenoz: Optional[InterfaceStates] = None
    line: Optional[LineView] = None

    def require(self, *names: str):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ConfigurationError(f"Selection needs candidates: {', '.join(missing)}")
        return tuple(getattr(self, name) for name in names)

    def populated(self) -> Iterable[str]:
        return [f.name for f in fields(self) if getattr(self, f.name) is not None]


@dataclass(frozen=True)
class BvdPolicy:
    """Variant name and its tunables."""

    variant: str = "HOCUS6"
    alpha: Optional[float] = None
    beta_stage1: float = THINC_BETA_STAGE1
    beta_stage2: float = THINC_BETA_STAGE2
    s_threshold: float = WENOZ_SMOOTHNESS_THRESHOLD

    def __post_init__(self):
        if self.variant not in BVD_VARIANTS:
            raise ConfigurationError(f"Unknown selection variant: {self.variant}")
        if self.alpha is not None and self.alpha <= 0:
            raise ConfigurationError("alpha must be positive")
        if self.beta_stage1 <= 0 or self.beta_stage2 <= 0:
            raise ConfigurationError("THINC beta must be positive")
        if self.s_threshold <= 0:
            raise ConfigurationError("Smoothness threshold must be positive")

    @property
    def mp5_alpha(self) -> float:
        if self.alpha is not None:
            return self.alpha
        return ALPHA_DEFAULTS.get(self.variant, ALPHA_FALLBACK)


def tbv(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """|L - R| at j-1/2 plus |L - R| at j+1/2 for every cell, shape (..., N)."""
    jump = np.abs(np.asarray(left) - np.asarray(right))
    return jump[..., :-1] + jump[..., 1:]


def tbv_of(states: InterfaceStates) -> np.ndarray:
    return tbv(states.left, states.right)


def _periodic(candidates: CandidateSet) -> bool:
    return candidates.line is not None and candidates.line.periodic


def _any_component(condition: np.ndarray) -> np.ndarray:
    return np.any(condition, axis=0) if condition.ndim > 1 else condition


def interface_marks(cell_mask: np.ndarray, offsets: Iterable[int],
                    periodic: bool = False) -> np.ndarray:
    """
    Spread a per-cell mask (..., N) onto interfaces (..., N+1).

    Faces outside the line are skipped. On a periodic line the mask is first
    wrapped past both ends, so interfaces 0 and N (one physical face) are
    marked by the same cells.
    """
    offsets = tuple(offsets)
    n = cell_mask.shape[-1]
    lead = 0
    if periodic:
        lead, trail = max(max(offsets), 0), max(1 - min(offsets), 0)
        cell_mask = np.take(cell_mask, np.arange(-lead, n + trail), axis=-1, mode="wrap")
    m = cell_mask.shape[-1]
    marks = np.zeros(cell_mask.shape[:-1] + (n + 1,), dtype=bool)
    for offset in offsets:
        shift = offset - lead
        k_lo, k_hi = max(shift, 0), min(m + shift, n + 1)
        if k_hi > k_lo:
            marks[..., k_lo:k_hi] |= cell_mask[..., k_lo - shift:k_hi - shift]
    return marks


def overwrite(baseline: InterfaceStates, candidate: InterfaceStates,
              cell_mask: np.ndarray, offsets: Iterable[int],
              periodic: bool = False) -> InterfaceStates:
    """Copy both L and R of ``candidate`` at every face marked by a triggered cell."""
    marks = interface_marks(cell_mask, offsets, periodic)
    return InterfaceStates(
        np.where(marks, candidate.left, baseline.left),
        np.where(marks, candidate.right, baseline.right),
        cell_mask,
    )


def _neighbours(line: LineView):
    g, n = line.n_ghost, line.n_cells
    v = line.values
    return v[..., g - 1:g + n - 1], v[..., g:g + n], v[..., g + 1:g + n + 1]


def extra_condition_gate(line: LineView) -> np.ndarray:
    """True at cells that are a local extremum: (u_{j+1}-u_j)(u_j-u_{j-1}) < 0."""
    before, center, after = _neighbours(line)
    return (after - center) * (center - before) < 0.0


def select_hocus(candidates: CandidateSet, policy: BvdPolicy,
                 smooth: str = "mp5") -> InterfaceStates:
    """
    Compact baseline with a shock-capturing fallback.

    A cell triggers when the fallback's TBV is smaller than the C5 TBV; its
    four surrounding interfaces then take the fallback pair. HOCUS5 keeps the
    upwind C5 pair as baseline, every other variant the central C6 pair.
    """
    c5, fallback = candidates.require("c5", smooth)
    if policy.variant == "HOCUS5":
        baseline = c5
    else:
        (baseline,) = candidates.require("c6")

    condition = tbv_of(fallback) < tbv_of(c5)
    if policy.variant == "HOCUS6_EXTRA":
        (line,) = candidates.require("line")
        condition &= extra_condition_gate(line)
    return overwrite(baseline, fallback, _any_component(condition), FOUR_INTERFACES,
                     _periodic(candidates))


def select_hocus_tvd(candidates: CandidateSet, policy: BvdPolicy) -> InterfaceStates:
    return select_hocus(candidates, policy, smooth="muscl")


def select_c5t2(candidates: CandidateSet, policy: BvdPolicy) -> InterfaceStates:
    """Two THINC stages on top of C5; the second compares against the first stage's result."""
    c5, sharp, sharper = candidates.require("c5", "thinc_stage1", "thinc_stage2")

    stage1_cells = _any_component(tbv_of(sharp) < tbv_of(c5))
    periodic = _periodic(candidates)
    stage1 = overwrite(c5, sharp, stage1_cells, FOUR_INTERFACES, periodic)

    stage2_cells = _any_component(tbv_of(sharper) < tbv_of(stage1))
    result = overwrite(stage1, sharper, stage2_cells, OWN_INTERFACES, periodic)
    result.triggered = stage1_cells | stage2_cells
    return result


def wenoz_smoothness(wenoz: InterfaceStates, line: LineView) -> np.ndarray:
    """
    S_j = (1 - r_j) / max(r_j, guard), where r_j compares fourth powers of the
    WENO-Z face jumps with those of the neighbouring cell differences.
    """
    before, center, after = _neighbours(line)
    jump4 = wenoz.jump ** 4
    numerator = jump4[..., :-1] + jump4[..., 1:]
    denominator = (center - before) ** 4 + (center - after) ** 4 + TBV_RATIO_GUARD
    ratio = numerator / denominator
    return (1.0 - ratio) / np.maximum(ratio, TBV_RATIO_GUARD)


def select_hocus_wenoz(candidates: CandidateSet, policy: BvdPolicy) -> InterfaceStates:
    baseline, wenoz, line = candidates.require("c6", "wenoz", "line")
    rough = _any_component(wenoz_smoothness(wenoz, line) < policy.s_threshold)
    return overwrite(baseline, wenoz, rough, OWN_INTERFACES, line.periodic)


SELECTORS = {
    "HOCUS5": select_hocus,
    "HOCUS6": select_hocus,
    "HOCUS6_EXTRA": select_hocus,
    "HOCUS_TVD": select_hocus_tvd,
    "C5T2": select_c5t2,
    "HOCUS_WENOZ": select_hocus_wenoz,
}


def select(candidates: CandidateSet, policy: BvdPolicy) -> InterfaceStates:
    """Dispatch to the selection of ``policy.variant``."""
    return SELECTORS[policy.variant](candidates, policy)
