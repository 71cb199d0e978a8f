"""
Cases package - benchmark catalog and reference solutions.
"""

from .library import CASES, CaseSpec, ReferenceRecipe, instantiate_case, list_cases
from .reference import fine_grid_solution, reference_solution, restrict

__all__ = [
    'CASES',
    'CaseSpec',
    'ReferenceRecipe',
    'instantiate_case',
    'list_cases',
    'fine_grid_solution',
    'reference_solution',
    'restrict',
]
