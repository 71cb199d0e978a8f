"""
BVD package - selection between compact and shock-capturing candidates.
"""

from .selector import (
    BVD_VARIANTS,
    BvdPolicy,
    CandidateSet,
    extra_condition_gate,
    interface_marks,
    select,
    select_c5t2,
    select_hocus,
    select_hocus_tvd,
    select_hocus_wenoz,
    tbv,
    wenoz_smoothness,
)

__all__ = [
    'BVD_VARIANTS',
    'BvdPolicy',
    'CandidateSet',
    'extra_condition_gate',
    'interface_marks',
    'select',
    'select_c5t2',
    'select_hocus',
    'select_hocus_tvd',
    'select_hocus_wenoz',
    'tbv',
    'wenoz_smoothness',
]
