"""
Run command implementation.
Runs one benchmark case with one scheme and writes the final fields.
"""

from .base import Command
from ..services import SimulationService
from ..utils.validators import validate_positive_int


class RunCommand(Command):
    """Command to run a case to its final time."""

    extra_flags = ("--snapshot-every",)

    def execute(self, args):
        """
        Run a case.

        Args:
            args: Flags such as ['--case', 'sod', '--scheme', 'HOCUS6', '--nx', '200']

        Returns:
            str: Run summary with the written files
        """
        self.check_flags(args)
        case = self.build_case(args)
        config = self.scheme_config(args, case=case)
        snapshot = self.flag_value(args, "--snapshot-every") or self.defaults.get("snapshot_every")
        snapshot_every = validate_positive_int(snapshot, "snapshot interval") if snapshot else 0

        self.debug(f"{case.name}: {config.describe()}, cells {case.cells}, t_end {case.t_end:g}")
        service = SimulationService(self.output_dir(args), snapshot_every=snapshot_every)
        result = service.run(case, config)
        report = result.report

        lines = [self.header(f"RUN {case.name.upper()} WITH {config.scheme}"), str(report)]
        if case.law_kind == "euler":
            density = result.primitive[0]
            lines.append(f"  density range: [{density.min():.6g}, {density.max():.6g}]")
        if report.outputs:
            lines.append("")
            lines.append("Files written:")
            lines.extend(f"  {path}" for path in report.outputs)
        lines.append("")
        lines.append(self.success_msg(f"{case.name} finished in {report.steps} steps"))
        return "\n".join(lines)

    def get_help(self):
        return """
Run Command
===========
Run one case with one scheme up to its final time.

Usage:
  run --case NAME [--scheme NAME] [--nx N] [--ny N] [--t-end T] [--cfl C]
      [--riemann HLLC|GLF] [--alpha A] [--projection on|off] [--c5-backend banded|thomas]
      [--knob name=value ...] [--snapshot-every K] [--out DIR | --no-output]

Examples:
  run --case sod --scheme HOCUS6 --nx 100
  run --case le_blanc --nx 200 --out results
  run --case shock_entropy_2d --nx 128 --ny 128 --knob theta=0.5236
  run --case double_mach --nx 480 --ny 120 --snapshot-every 200

Output (in DIR/<case>_<scheme>_<cells>/):
  final.csv          x[,y],rho,u[,v],p at cell centres (u for advection)
  final.vtk          2D runs only, legacy STRUCTURED_POINTS cell data
  final_slice_x.csv  2D runs only, the x line through the domain middle
  report.json        run report and scheme settings
"""
