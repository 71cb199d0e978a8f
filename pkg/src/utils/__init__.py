"""
Utility functions and helpers.
"""

from .logger import (
    get_logger,
    set_verbose,
    set_quiet,
    is_verbose,
    is_quiet,
    log_operation,
    OperationLogger,
)
from .errors import (
    HocusError,
    ConfigurationError,
    InvalidStateError,
    SingularSystemError,
    UnsupportedCaseError,
    CaseLookupError,
)
from .validators import (
    ValidationError,
    validate_scheme_name,
    validate_riemann_name,
    validate_positive_int,
    validate_positive_float,
    validate_cfl,
    validate_size_list,
    validate_output_dir,
)

__all__ = [
    'get_logger',
    'set_verbose',
    'set_quiet',
    'is_verbose',
    'is_quiet',
    'log_operation',
    'OperationLogger',
    'HocusError',
    'ConfigurationError',
    'InvalidStateError',
    'SingularSystemError',
    'UnsupportedCaseError',
    'CaseLookupError',
    'ValidationError',
    'validate_scheme_name',
    'validate_riemann_name',
    'validate_positive_int',
    'validate_positive_float',
    'validate_cfl',
    'validate_size_list',
    'validate_output_dir',
]
