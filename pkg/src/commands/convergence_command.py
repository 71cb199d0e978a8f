"""
Convergence command implementation.
Runs an accuracy study on a smooth case and prints errors with observed orders.
"""

from .base import Command
from ..services import CONVERGENCE_CASES, ConvergenceStudy, SimulationService, write_report
from ..utils.validators import ValidationError, validate_size_list

DEFAULT_SIZES = "40,80,160"


class ConvergenceCommand(Command):
    """Command to measure L1 errors on successively refined grids."""

    extra_flags = ("--sizes",)

    def execute(self, args):
        self.check_flags(args)
        if self.flag_value(args, "--nx", "--ny") is not None:
            raise ValidationError("convergence takes --sizes, not --nx/--ny")
        case = self.build_case(args)
        if case.name not in CONVERGENCE_CASES:
            raise ValidationError(
                f"{case.name} is not an accuracy case. Choose one of: {', '.join(CONVERGENCE_CASES)}"
            )
        config = self.scheme_config(args, case=case)
        sizes_text = self.flag_value(args, "--sizes") or self.defaults.get("sizes") or DEFAULT_SIZES
        if isinstance(sizes_text, list):
            sizes_text = ",".join(str(n) for n in sizes_text)
        sizes = validate_size_list(sizes_text)

        output = self.output_dir(args)
        study = ConvergenceStudy(SimulationService(None))
        report = study.run(case, config, sizes)

        lines = [
            self.header(f"ACCURACY OF {config.scheme} ON {case.name.upper()} (t = {case.t_end:g})"),
            report.table(),
        ]
        if output is not None:
            path = write_report(output / f"convergence_{case.name}_{config.scheme.lower()}",
                                {"convergence": report.to_dict(), "config": config.to_dict()})
            lines.append("")
            lines.append(self.info_msg(f"Report written to {path}"))
        triggered = [level.triggered for level in report.levels]
        if config.is_bvd and any(triggered):
            lines.append(self.warning_msg(f"BVD switching still active in smooth flow: {triggered}"))
        lines.append(self.success_msg(f"{len(sizes)} grid levels completed"))
        return "\n".join(lines)

    def get_help(self):
        return f"""
Convergence Command
===================
L1 error of the first primitive variable against the exact solution on a
sequence of grids, with dt = 0.1 dx^2.

Usage:
  convergence --case NAME [--scheme NAME] [--sizes N1,N2,...] [--t-end T]
              [--alpha A] [--out DIR | --no-output]

Cases: {', '.join(CONVERGENCE_CASES)}
Default sizes: {DEFAULT_SIZES}

Examples:
  convergence --case gaussian_advect --scheme HOCUS6 --sizes 40,80,160,320
  convergence --case henrick_critical --scheme HOCUS5 --sizes 20,40,80,160
  convergence --case euler2d_smooth --scheme HOCUS6 --sizes 20,40,80
"""
