"""
Services module for HOCUS.
Contains the orchestration between cases, the solver and the output files.
"""

from .reports import ComparisonRow, ConvergenceLevel, ConvergenceReport, RunReport
from .simulation import RunResult, SimulationService, conservation_drift
from .convergence import CONVERGENCE_CASES, ConvergenceStudy
from .comparison import METRICS, ComparisonService, extrema_count, oscillation_amplitude
from .batch import BatchOutcome, BatchRunner, parse_entry
from .output_writer import write_csv, write_report, write_slice, write_table, write_vtk

__all__ = [
    'ComparisonRow',
    'ConvergenceLevel',
    'ConvergenceReport',
    'RunReport',
    'RunResult',
    'SimulationService',
    'conservation_drift',
    'CONVERGENCE_CASES',
    'ConvergenceStudy',
    'METRICS',
    'ComparisonService',
    'extrema_count',
    'oscillation_amplitude',
    'BatchOutcome',
    'BatchRunner',
    'parse_entry',
    'write_csv',
    'write_report',
    'write_slice',
    'write_table',
    'write_vtk',
]
