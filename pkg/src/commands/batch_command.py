"""
Batch command implementation.
Runs a JSON list of independent run configurations on a thread pool.
"""

import json
from pathlib import Path

from .base import Command
from ..config.settings import BATCH_THREADS
from ..services import BatchRunner, SimulationService, write_table
from ..utils.errors import HocusError
from ..utils.validators import ValidationError, validate_positive_int


class BatchCommand(Command):
    """Command to run many cases concurrently."""

    extra_flags = ("--file", "-f", "--threads")

    def execute(self, args):
        self.check_flags(args)
        entries = self._entries(args)
        threads = self.flag_value(args, "--threads")
        max_workers = validate_positive_int(threads, "threads") if threads else BATCH_THREADS

        output = self.output_dir(args)
        runner = BatchRunner(SimulationService(output), max_workers=max_workers)
        with self.log_op("Batch", runs=len(entries), threads=max_workers) as op:
            outcomes = runner.run(entries)
            op.success(f"{sum(o.ok for o in outcomes)}/{len(outcomes)} runs succeeded")

        lines = [self.header(f"BATCH OF {len(outcomes)} RUNS")]
        rows = []
        for outcome in outcomes:
            label = f"#{outcome.index} {outcome.entry.get('case')} {outcome.entry.get('scheme', 'HOCUS6')}"
            if outcome.ok:
                report = outcome.report
                lines.append(self.success_msg(f"{label}: {report.steps} steps, "
                                              f"drift {report.max_drift:.2e}"))
                rows.append({"index": outcome.index, **_summary(report.to_dict()), "error": ""})
            else:
                lines.append(self.error_msg(f"{label}: {outcome.error}"))
                rows.append({"index": outcome.index, "case": outcome.entry.get("case"),
                             "error": outcome.error})
        if output is not None:
            path = write_table(output / "batch_summary.csv", rows)
            lines.append(self.info_msg(f"Summary written to {path}"))

        failed = [o for o in outcomes if not o.ok]
        if failed:
            raise BatchFailure("\n".join(lines), len(failed))
        return "\n".join(lines)

    def _entries(self, args):
        source = self.flag_value(args, "--file", "-f")
        if source is None:
            entries = self.defaults.get("runs")
            if entries is None:
                raise ValidationError("batch needs --file RUNS.json (or 'runs' in --config)")
        else:
            path = Path(source)
            if not path.is_file():
                raise ValidationError(f"Batch file not found: {path}")
            try:
                entries = json.loads(path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as e:
                raise ValidationError(f"Batch file is not valid JSON: {e}") from e
        if isinstance(entries, dict):
            entries = entries.get("runs")
        if not isinstance(entries, list) or not entries:
            raise ValidationError("Batch input must be a non-empty list of runs")
        return entries

    def get_help(self):
        return """
Batch Command
=============
Run independent cases concurrently. Each run writes its own directory.

Usage:
  batch --file RUNS.json [--threads N] [--out DIR | --no-output]

RUNS.json is a list (or {"runs": [...]}) of objects such as:
  {"case": "sod", "scheme": "HOCUS6", "cells": [200], "t_end": 0.2}
  {"case": "shock_entropy_2d", "cells": [64, 64], "knobs": {"theta": 0.5236}}

The thread count defaults to the HOCUS_THREADS environment variable.
A failing run is reported and does not stop the others.
"""


def _summary(report: dict) -> dict:
    keep = ("case", "scheme", "riemann", "cfl", "t_end", "steps", "wall_time", "triggered_last")
    summary = {k: report[k] for k in keep}
    summary["grid"] = "x".join(str(n) for n in report["grid"])
    summary["max_drift"] = max(report["drift"]) if report["drift"] else 0.0
    return summary


class BatchFailure(HocusError):
    """Some batch runs failed; carries the full batch listing."""

    def __init__(self, listing: str, failed: int):
        super().__init__(f"{failed} batch run(s) failed")
        self.listing = listing
        self.failed = failed
