"""
Batch runner - independent runs from a JSON list on a bounded thread pool.

Each entry looks like:
    {"case": "sod", "scheme": "HOCUS6", "cells": [200], "t_end": 0.2,
     "knobs": {}, "riemann": "HLLC", "cfl": 0.2}
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..cases import instantiate_case
from ..config.settings import BATCH_THREADS
from ..solver import SchemeConfig
from ..utils.errors import HocusError
from ..utils.logger import get_logger
from ..utils.validators import ValidationError
from .reports import RunReport
from .simulation import SimulationService

SCHEME_KEYS = ("scheme", "riemann", "alpha", "cfl", "characteristic_projection",
               "beta_stage1", "beta_stage2", "s_threshold", "c5_backend")
ENTRY_KEYS = SCHEME_KEYS + ("case", "cells", "t_end", "knobs")


@dataclass
class BatchOutcome:
    index: int
    entry: dict
    report: Optional[RunReport] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def parse_entry(entry: dict):
    """(case spec, scheme config) for one batch entry."""
    if not isinstance(entry, dict) or "case" not in entry:
        raise ValidationError(f"Batch entry needs a 'case': {entry}")
    unknown = set(entry) - set(ENTRY_KEYS)
    if unknown:
        raise ValidationError(f"Unknown batch keys: {', '.join(sorted(unknown))}")
    case = instantiate_case(entry["case"], t_end=entry.get("t_end"),
                            cells=entry.get("cells"), **entry.get("knobs", {}))
    config = SchemeConfig.from_dict({k: entry[k] for k in SCHEME_KEYS if k in entry})
    return case, config


class BatchRunner:
    """Runs entries concurrently; one failing run never stops the others."""

    def __init__(self, simulation: SimulationService, max_workers: int = BATCH_THREADS):
        self.simulation = simulation
        self.max_workers = max(1, int(max_workers))
        self.logger = get_logger()

    def _run_one(self, index: int, entry: dict) -> BatchOutcome:
        try:
            case, config = parse_entry(entry)
            result = self.simulation.run(case, config)
            return BatchOutcome(index, entry, report=result.report)
        except HocusError as e:
            self.logger.error(f"Batch entry {index} ({entry.get('case')}) failed: {e}")
            return BatchOutcome(index, entry, error=str(e))

    def run(self, entries: Sequence[dict]) -> List[BatchOutcome]:
        workers = min(self.max_workers, max(1, len(entries)))
        self.logger.debug(f"Batch of {len(entries)} runs on {workers} threads")
        outcomes: List[BatchOutcome] = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(self._run_one, i, entry) for i, entry in enumerate(entries)]
            for future in as_completed(futures):
                outcomes.append(future.result())
        return sorted(outcomes, key=lambda o: o.index)
