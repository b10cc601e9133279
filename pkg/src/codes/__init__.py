"""
Hermitian Hull EAQMDS - Codes Package
"""

from .grs_codes import (
    CodeFamily,
    CodeFamilyParams,
    admissible_families,
    code_family,
    failure_points_bruteforce,
    gram_rank,
    hull_dimension_oracle,
    select_L,
    validate_params,
)

__all__ = [
    'CodeFamily',
    'CodeFamilyParams',
    'admissible_families',
    'code_family',
    'failure_points_bruteforce',
    'gram_rank',
    'hull_dimension_oracle',
    'select_L',
    'validate_params',
]
