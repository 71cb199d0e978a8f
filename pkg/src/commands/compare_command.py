"""
Compare command implementation.
Runs one case with several schemes and tabulates a metric per scheme.
"""

from .base import Command, split_list
from ..services import METRICS, ComparisonService, SimulationService
from ..utils.validators import ValidationError

DEFAULT_SCHEMES = "MP5,HOCUS6"


class CompareCommand(Command):
    """Command to compare schemes on the same case."""

    extra_flags = ("--schemes", "--metric", "--window")

    def execute(self, args):
        self.check_flags(args)
        case = self.build_case(args)
        schemes = split_list(self.flag_value(args, "--schemes")
                             or ",".join(self.defaults.get("schemes", [])) or DEFAULT_SCHEMES)
        configs = [self.scheme_config(args, scheme=name, case=case) for name in schemes]
        metric = self.flag_value(args, "--metric") or self.defaults.get("metric", "l1_vs_reference")
        window = self._window(self.flag_value(args, "--window") or self.defaults.get("window"))

        output = self.output_dir(args)
        csv_path = output / f"compare_{case.name}_{metric}.csv" if output is not None else None
        rows = ComparisonService(SimulationService(None)).compare(case, configs, metric, window, csv_path)

        lines = [self.header(f"{metric.upper()} ON {case.name.upper()} (t = {case.t_end:g})")]
        if metric == "slice":
            lines.append(self.info_msg(f"Density lines for {', '.join(r.scheme for r in rows)}"))
        else:
            lines.append(f"{'scheme':<14}{'value':>14}{'steps':>10}")
            lines.append(self.divider(38))
            for row in rows:
                lines.append(f"{row.scheme:<14}{row.value:>14.6e}{int(row.extra['steps']):>10}")
        if len(rows) == 1:
            lines.append(self.info_msg("Single scheme given; nothing to compare against"))
        if csv_path is not None:
            lines.append(self.info_msg(f"Table written to {csv_path}"))
        lines.append(self.success_msg(f"{len(rows)} scheme(s) compared"))
        return "\n".join(lines)

    @staticmethod
    def _window(text):
        if text is None:
            return None
        parts = split_list(text) if isinstance(text, str) else list(text)
        try:
            lo, hi = (float(p) for p in parts)
        except (TypeError, ValueError):
            raise ValidationError(f"--window expects lo,hi, got: {text}") from None
        if not lo < hi:
            raise ValidationError(f"--window needs lo < hi, got: {text}")
        return lo, hi

    def get_help(self):
        return f"""
Compare Command
===============
Run the same case with several schemes and tabulate one metric.

Usage:
  compare --case NAME [--schemes A,B,...] [--metric METRIC] [--window lo,hi]
          [--nx N] [--ny N] [--t-end T] [--out DIR | --no-output]

Metrics: {', '.join(METRICS)}
  oscillation_amplitude needs --window (max - min of density over x in [lo, hi])
  slice writes the density line of every scheme to one CSV

Examples:
  compare --case advection_complex --schemes MP5,WENO_Z,HOCUS6 --nx 200
  compare --case titarev_toro --schemes MP5,HOCUS6 --metric oscillation_amplitude --window 0,2
  compare --case sod --schemes HOCUS5,HOCUS6 --metric extrema_count
"""
