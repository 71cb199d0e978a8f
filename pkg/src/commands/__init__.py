"""
Command implementations for the HOCUS CLI.
"""

from .base import Command
from .run_command import RunCommand
from .convergence_command import ConvergenceCommand
from .compare_command import CompareCommand
from .cases_command import CasesCommand
from .batch_command import BatchCommand, BatchFailure

__all__ = [
    'Command',
    'RunCommand',
    'ConvergenceCommand',
    'CompareCommand',
    'CasesCommand',
    'BatchCommand',
    'BatchFailure',
]
