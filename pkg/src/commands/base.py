"""
Base class for commands - implements the Command Pattern.

DESIGN PATTERNS:
================
1. COMMAND PATTERN - Each CLI verb is an object with execute(args)
2. TEMPLATE METHOD PATTERN - Subclasses override execute(), the base supplies parsing
3. LAYERED CONFIGURATION - Config-file values first, command-line flags on top

RESPONSIBILITIES:
=================
- Abstract interface for all commands
- Output formatting helpers (success_msg, error_msg, ...)
- Flag parsing shared by run / convergence / compare
- Building a CaseSpec and a SchemeConfig from file values plus flags

Commands raise HocusError subclasses; the CLI turns them into exit codes.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..cases import CaseSpec, instantiate_case
from ..config.settings import OUTPUT_DIR
from ..solver import SchemeConfig
from ..utils.logger import get_logger, is_verbose, log_operation
from ..utils.validators import (
    ValidationError,
    validate_output_dir,
    validate_positive_float,
    validate_positive_int,
)

# Flags shared by every command that builds a run; value-less flags are listed separately.
RUN_FLAGS = ("--case", "-c", "--scheme", "-s", "--riemann", "--alpha", "--cfl",
             "--t-end", "--nx", "--ny", "--out", "-o", "--knob", "--projection",
             "--c5-backend")
SWITCHES = ("--no-output", "--details")

# Config-file keys that belong to the scheme rather than the case
SCHEME_FILE_KEYS = ("scheme", "riemann", "alpha", "cfl", "characteristic_projection",
                    "beta_stage1", "beta_stage2", "s_threshold", "c5_backend")


class Command(ABC):
    """
    Abstract base class for all commands.

    Provides helper methods for:
    - Consistent output formatting (success, error, info messages)
    - Operation logging with context
    - Flag parsing and run-configuration layering

    Attributes:
        defaults: Values loaded from the --config JSON file (may be empty)
    """

    # Flags a subclass accepts besides RUN_FLAGS
    extra_flags: Tuple[str, ...] = ()

    def __init__(self, defaults: Optional[Dict[str, Any]] = None):
        self.defaults = dict(defaults or {})
        self.logger = get_logger()

    @abstractmethod
    def execute(self, args: list) -> str:
        """
        Execute the command with given arguments.

        Returns:
            str: Result message

        Raises:
            HocusError: Any usage or numerical failure
        """
        pass

    @abstractmethod
    def get_help(self) -> str:
        """Get help text for this command."""
        pass

    # ==========================================================================
    # Output Formatting Helpers
    # ==========================================================================

    @staticmethod
    def success_msg(text: str) -> str:
        return f"[OK] {text}"

    @staticmethod
    def error_msg(text: str) -> str:
        return f"[ERROR] {text}"

    @staticmethod
    def info_msg(text: str) -> str:
        return f"[INFO] {text}"

    @staticmethod
    def warning_msg(text: str) -> str:
        return f"[WARN] {text}"

    @staticmethod
    def header(text: str, width: int = 60) -> str:
        """Create a formatted header line."""
        return f"{'═' * width}\n{text}\n{'═' * width}"

    @staticmethod
    def divider(width: int = 60) -> str:
        return "─" * width

    # ==========================================================================
    # Operation Logging
    # ==========================================================================

    def log_op(self, operation_name: str, **context):
        """
        Create an operation logger for this command.

        Usage:
            with self.log_op("Running case", case=name) as op:
                ...
                op.success("done")
        """
        return log_operation(operation_name, **context)

    @property
    def verbose(self) -> bool:
        return is_verbose()

    def debug(self, message: str):
        """Log a debug message (only visible in verbose mode)."""
        self.logger.debug(f"  → {message}")

    # ==========================================================================
    # Flag Parsing
    # ==========================================================================

    def check_flags(self, args: List[str]):
        """Reject flags this command does not know."""
        allowed = set(RUN_FLAGS) | set(SWITCHES) | set(self.extra_flags)
        expects_value = False
        for token in args:
            if expects_value:
                expects_value = False
                continue
            if token.startswith("-") and not _is_number(token):
                if token not in allowed:
                    raise ValidationError(f"Unknown option: {token}. Use 'help {self.name}'.")
                expects_value = token not in SWITCHES
            else:
                raise ValidationError(f"Unexpected argument: {token}")
        if expects_value:
            raise ValidationError(f"Option {args[-1]} needs a value")

    @property
    def name(self) -> str:
        return type(self).__name__.replace("Command", "").lower()

    @staticmethod
    def flag_value(args: List[str], *flags: str) -> Optional[str]:
        """Value following the last occurrence of any of ``flags``."""
        found = None
        for i, token in enumerate(args[:-1]):
            if token in flags:
                found = args[i + 1]
        return found

    @staticmethod
    def flag_values(args: List[str], flag: str) -> List[str]:
        """Every value of a repeatable flag."""
        return [args[i + 1] for i, token in enumerate(args[:-1]) if token == flag]

    # ==========================================================================
    # Run Configuration
    # ==========================================================================

    def scheme_settings(self, args: List[str], scheme: Optional[str] = None) -> Dict[str, Any]:
        """Scheme settings from the config file with flags layered on top."""
        settings = {k: self.defaults[k] for k in SCHEME_FILE_KEYS if k in self.defaults}
        overrides = {
            "scheme": scheme or self.flag_value(args, "--scheme", "-s"),
            "riemann": self.flag_value(args, "--riemann"),
            "alpha": self.flag_value(args, "--alpha"),
            "cfl": self.flag_value(args, "--cfl"),
            "c5_backend": self.flag_value(args, "--c5-backend"),
        }
        projection = self.flag_value(args, "--projection")
        if projection is not None:
            overrides["characteristic_projection"] = _parse_switch(projection, "--projection")
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return settings

    def scheme_config(self, args: List[str], scheme: Optional[str] = None,
                      case: Optional[CaseSpec] = None) -> SchemeConfig:
        """SchemeConfig for this invocation; the case's own CFL when none is given."""
        settings = self.scheme_settings(args, scheme)
        if case is not None:
            settings.setdefault("cfl", case.cfl)
        return SchemeConfig.from_dict(settings)

    def case_name(self, args: List[str]) -> str:
        name = self.flag_value(args, "--case", "-c") or self.defaults.get("case")
        if not name:
            raise ValidationError("A case is required (--case NAME). Use 'cases' to list them.")
        return str(name)

    def cells(self, args: List[str]) -> Optional[Tuple[int, ...]]:
        """Grid override from --nx/--ny or the config file's cells/nx/ny."""
        cells = self.defaults.get("cells")
        nx = self.flag_value(args, "--nx") or self.defaults.get("nx")
        ny = self.flag_value(args, "--ny") or self.defaults.get("ny")
        if nx is None and ny is None:
            if cells is None:
                return None
            return tuple(validate_positive_int(n, "cells") for n in cells)
        sizes = [validate_positive_int(nx, "nx")] if nx is not None else []
        if ny is not None:
            if not sizes:
                raise ValidationError("--ny needs --nx")
            sizes.append(validate_positive_int(ny, "ny"))
        return tuple(sizes)

    def knobs(self, args: List[str]) -> Dict[str, Any]:
        """Case knobs from the config file and repeated --knob name=value flags."""
        knobs = dict(self.defaults.get("knobs", {}))
        for item in self.flag_values(args, "--knob"):
            key, sep, value = item.partition("=")
            if not sep or not key:
                raise ValidationError(f"--knob expects name=value, got: {item}")
            knobs[key] = _parse_scalar(value)
        return knobs

    def build_case(self, args: List[str]) -> CaseSpec:
        t_end = self.flag_value(args, "--t-end") or self.defaults.get("t_end")
        if t_end is not None:
            t_end = validate_positive_float(t_end, "t_end")
        return instantiate_case(self.case_name(args), t_end=t_end,
                                cells=self.cells(args), **self.knobs(args))

    def output_dir(self, args: List[str]) -> Optional[Path]:
        """Artifact directory; None when --no-output is given."""
        if "--no-output" in args:
            return None
        out = self.flag_value(args, "--out", "-o") or self.defaults.get("out")
        return validate_output_dir(out) if out else OUTPUT_DIR


def _is_number(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def _parse_scalar(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def _parse_switch(text: str, label: str) -> bool:
    value = str(text).strip().lower()
    if value in ("on", "true", "yes", "1"):
        return True
    if value in ("off", "false", "no", "0"):
        return False
    raise ValidationError(f"{label} expects on/off, got: {text}")


def split_list(text: str) -> Iterable[str]:
    """Comma-separated values, blanks dropped."""
    return [part.strip() for part in str(text).split(",") if part.strip()]
