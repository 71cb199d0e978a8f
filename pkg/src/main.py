"""
HOCUS - finite-volume shock-capturing solver - main CLI entry point.

DESIGN PATTERNS:
================
1. FACTORY PATTERN - CommandFactory creates command instances without exposing the wiring
2. COMMAND PATTERN - Each action (run, convergence, ...) is encapsulated as a Command object
3. FACADE PATTERN - HocusCLI offers one entry point over cases, solver and services
4. REGISTRY PATTERN - Commands are registered in a dictionary for dynamic lookup

COMPONENTS:
===========
- CommandFactory: Creates and holds the command instances
- HocusCLI: Parses global flags, loads --config, runs a command, maps errors to exit codes

EXIT CODES:
===========
0 success, 1 other failure, 2 usage error, 3 numerical failure
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .commands.base import Command
from .commands.run_command import RunCommand
from .commands.convergence_command import ConvergenceCommand
from .commands.compare_command import CompareCommand
from .commands.cases_command import CasesCommand
from .commands.batch_command import BatchCommand
from .config.settings import EXIT_FAILURE, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE
from .utils.errors import (
    CaseLookupError,
    ConfigurationError,
    HocusError,
    InvalidStateError,
    SingularSystemError,
    UnsupportedCaseError,
)
from .utils.logger import get_logger, set_quiet, set_verbose
from .utils.validators import ValidationError


class CommandFactory:
    """
    Factory for creating command instances.
    Implements Factory pattern for command instantiation.
    """

    def __init__(self, defaults: Optional[Dict[str, Any]] = None):
        """Initialize factory with the values of the --config file."""
        self.defaults = defaults or {}
        self._commands: Dict[str, Command] = {}
        self._register_commands()

    def _register_commands(self):
        """Register all available commands."""
        self._commands = {
            'run': RunCommand(self.defaults),
            'convergence': ConvergenceCommand(self.defaults),
            'conv': ConvergenceCommand(self.defaults),  # Alias
            'compare': CompareCommand(self.defaults),
            'cases': CasesCommand(self.defaults),
            'ls': CasesCommand(self.defaults),  # Alias
            'batch': BatchCommand(self.defaults),
        }

    def get_command(self, command_name: str) -> Command:
        """
        Get command instance by name.

        Raises:
            KeyError: If command not found
        """
        command = self._commands.get(command_name.lower())
        if not command:
            raise KeyError(f"Unknown command: {command_name}")
        return command

    def get_all_commands(self) -> Dict[str, Command]:
        """Return all registered commands."""
        return self._commands


def exit_code_for(error: Exception) -> int:
    """Exit code of a failed command."""
    if isinstance(error, (ValidationError, CaseLookupError, UnsupportedCaseError)):
        return EXIT_USAGE
    if isinstance(error, (InvalidStateError, SingularSystemError)):
        return EXIT_NUMERICAL
    if isinstance(error, ConfigurationError):
        return EXIT_USAGE
    return EXIT_FAILURE


def load_config(path: str) -> Dict[str, Any]:
    """Read a JSON run-config file (an object of run settings)."""
    config_path = Path(path)
    if not config_path.is_file():
        raise ValidationError(f"Config file not found: {config_path}")
    try:
        values = json.loads(config_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValidationError(f"Config file is not valid JSON: {e}") from e
    if not isinstance(values, dict):
        raise ValidationError("Config file must contain a JSON object")
    return values


class HocusCLI:
    """
    Main CLI application class.
    Handles global flags, command dispatch and exit codes.
    """

    def __init__(self, defaults: Optional[Dict[str, Any]] = None):
        self.logger = get_logger()
        self.command_factory = CommandFactory(defaults)

    def print_help(self):
        """Print general help information."""
        help_text = """
╔══════════════════════════════════════════════════════════════════╗
║                         HOCUS Commands                           ║
╚══════════════════════════════════════════════════════════════════╝

RUN A CASE
─────────────────────────────────────
  cases        List benchmark cases → cases --details
  run          Run one case → run --case sod --scheme HOCUS6 --nx 100

STUDIES
─────────────────────────────────────
  convergence  Errors and orders → convergence --case gaussian_advect --sizes 40,80,160
  compare      Schemes side by side → compare --case advection_complex --schemes MP5,HOCUS6
  batch        Many runs at once → batch --file runs.json

HELP
─────────────────────────────────────
  help         Show this message
  help <cmd>   Detailed help → help run

GLOBAL OPTIONS
─────────────────────────────────────
  --verbose, -v     Show debug info
  --quiet, -q       Errors only
  --config FILE     JSON run settings; command-line flags take precedence

Schemes: MP5 WENO_Z C5 C6 E6 HOCUS5 HOCUS6 HOCUS_TVD C5T2 HOCUS_WENOZ HOCUS6_EXTRA
        """
        print(help_text)

    def print_command_help(self, command_name: str) -> int:
        """Print help for a specific command."""
        try:
            command = self.command_factory.get_command(command_name)
            print(command.get_help())
            return EXIT_OK
        except KeyError:
            print(f"Unknown command: {command_name}")
            print("Use 'help' to see all available commands.")
            return EXIT_USAGE

    def execute_command(self, command_name: str, args: list) -> Tuple[str, int]:
        """
        Execute a command with given arguments.

        Returns:
            tuple: (output text, exit code)
        """
        try:
            command = self.command_factory.get_command(command_name)
        except KeyError:
            return (f"[ERROR] Unknown command: {command_name}. Type 'help' for available commands.",
                    EXIT_USAGE)

        try:
            return command.execute(args), EXIT_OK
        except HocusError as e:
            code = exit_code_for(e)
            self.logger.debug(f"{command_name} failed with exit code {code}: {e!r}")
            listing = getattr(e, "listing", None)
            message = f"[ERROR] {e}"
            return (f"{listing}\n{message}" if listing else message), code
        except Exception as e:
            self.logger.error(f"Command execution error: {e}")
            return f"[ERROR] {e}", EXIT_FAILURE

    def run_command(self, args: List[str]) -> int:
        """
        Run a single command from command-line arguments (global flags already removed).
        """
        if not args:
            print("[ERROR] No command specified")
            self.print_help()
            return EXIT_USAGE

        command_name, command_args = args[0], args[1:]
        if command_name in ('help', '-h', '--help'):
            if command_args:
                return self.print_command_help(command_args[0])
            self.print_help()
            return EXIT_OK

        result, code = self.execute_command(command_name, command_args)
        print(result)
        return code


def split_global_flags(argv: List[str]) -> Tuple[List[str], Optional[str]]:
    """Apply --verbose/--quiet and pull out --config FILE; returns the remaining args."""
    args = list(argv)
    if '--verbose' in args or '-v' in args:
        set_verbose(True)
        args = [a for a in args if a not in ('--verbose', '-v')]
        get_logger().debug("Verbose mode enabled")

    if '--quiet' in args or '-q' in args:
        set_quiet(True)
        args = [a for a in args if a not in ('--quiet', '-q')]

    config_path = None
    if '--config' in args:
        idx = args.index('--config')
        if idx + 1 >= len(args):
            raise ValidationError("--config needs a file path")
        config_path = args[idx + 1]
        del args[idx:idx + 2]
    return args, config_path


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for HOCUS; returns the process exit code."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        args, config_path = split_global_flags(argv)
        defaults = load_config(config_path) if config_path else {}
    except ValidationError as e:
        print(f"[ERROR] {e}")
        return EXIT_USAGE
    return HocusCLI(defaults).run_command(args)


if __name__ == "__main__":
    sys.exit(main())
