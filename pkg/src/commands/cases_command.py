"""
Cases command implementation.
Lists the benchmark catalog.
"""

from .base import Command
from ..cases import CASES, instantiate_case, list_cases
from ..utils.errors import UnsupportedCaseError


class CasesCommand(Command):
    """Command to list available cases, optionally with their defaults."""

    extra_flags = ("--details",)

    def execute(self, args):
        self.check_flags(args)
        details = "--details" in args
        cases = list_cases()
        lines = [self.header(f"BENCHMARK CASES ({len(cases)} total)")]
        for name, description in cases.items():
            lines.append(f"  {name:<22} {description}")
            if details:
                lines.append(f"  {'':<22} {self._defaults(name)}")
        lines.append("")
        lines.append("Tip: run --case NAME to run one; 'help run' for options.")
        return "\n".join(lines)

    @staticmethod
    def _defaults(name: str) -> str:
        try:
            case = instantiate_case(name)
        except UnsupportedCaseError:
            return "(not runnable)"
        cells = "x".join(str(n) for n in case.cells)
        return f"{case.law_kind}, {cells} cells, t_end {case.t_end:g}, reference: {case.reference.kind}"

    def get_help(self):
        return f"""
Cases Command
=============
List the {len(CASES)} benchmark cases.

Usage:
  cases             Names and one-line descriptions
  cases --details   Also the default grid, final time and reference kind
"""
