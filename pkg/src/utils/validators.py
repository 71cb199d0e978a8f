"""
Input validation utilities.
Provides reusable validation functions for command-line and config-file inputs.
"""

from pathlib import Path

from ..config.settings import SCHEME_NAMES, RIEMANN_NAMES
from .errors import ConfigurationError


class ValidationError(ConfigurationError):
    """Custom exception for user-input validation errors."""
    pass


def validate_scheme_name(name):
    """
    Validate a reconstruction variant name.

    Accepts any case and '-' in place of '_' (e.g. 'weno-z', 'hocus_tvd').

    Returns:
        str: Canonical upper-case variant name

    Raises:
        ValidationError: If the name is not a known variant
    """
    if not name or not str(name).strip():
        raise ValidationError("Scheme name cannot be empty")

    canonical = str(name).strip().upper().replace("-", "_")
    if canonical == "WENOZ":
        canonical = "WENO_Z"
    if canonical not in SCHEME_NAMES:
        raise ValidationError(
            f"Unknown scheme: {name}. Choose one of: {', '.join(SCHEME_NAMES)}"
        )
    return canonical


def validate_riemann_name(name):
    """Validate a Riemann solver name (HLLC or GLF)."""
    if not name:
        raise ValidationError("Riemann solver name cannot be empty")
    canonical = str(name).strip().upper()
    if canonical not in RIEMANN_NAMES:
        raise ValidationError(
            f"Unknown Riemann solver: {name}. Choose one of: {', '.join(RIEMANN_NAMES)}"
        )
    return canonical


def validate_positive_int(value, label="value"):
    """
    Validate a strictly positive integer (grid sizes, step counts).

    Raises:
        ValidationError: If value is not an integer > 0
    """
    try:
        as_int = int(value)
    except (ValueError, TypeError):
        raise ValidationError(f"{label} must be an integer, got: {value}")
    if as_int <= 0:
        raise ValidationError(f"{label} must be positive, got: {as_int}")
    return as_int


def validate_positive_float(value, label="value"):
    """Validate a strictly positive float (t_end, alpha, beta)."""
    try:
        as_float = float(value)
    except (ValueError, TypeError):
        raise ValidationError(f"{label} must be a number, got: {value}")
    if not as_float > 0.0:
        raise ValidationError(f"{label} must be positive, got: {as_float}")
    return as_float


def validate_cfl(value):
    """
    Validate a CFL number.

    Returns:
        float: CFL in the open interval (0, 1)
    """
    cfl = validate_positive_float(value, "CFL")
    if cfl >= 1.0:
        raise ValidationError(f"CFL must be in (0, 1), got: {cfl}")
    return cfl


def validate_size_list(text):
    """
    Parse a comma-separated list of grid sizes (e.g. '40,80,160').

    Returns:
        list[int]: Sizes in increasing order
    """
    if not text:
        raise ValidationError("Size list cannot be empty")
    parts = [p for p in str(text).replace(" ", "").split(",") if p]
    sizes = [validate_positive_int(p, "grid size") for p in parts]
    if len(sizes) != len(set(sizes)):
        raise ValidationError(f"Duplicate grid sizes in: {text}")
    return sorted(sizes)


def validate_output_dir(path):
    """Return the output directory as a Path, refusing existing plain files."""
    if not path:
        raise ValidationError("Output directory cannot be empty")
    out = Path(path)
    if out.exists() and not out.is_dir():
        raise ValidationError(f"Output path exists and is not a directory: {out}")
    return out
