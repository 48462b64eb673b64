"""
Counts package - subspace counts and symmetric matrix character sums
"""
from .subspaces import beta, count_subspaces, mu_delta
from .symmetric import (
    CharKind,
    char_kind,
    determinant_histogram,
    sym_bruteforce,
    sym_closed,
    sym_psi
)

__all__ = [
    'beta',
    'count_subspaces',
    'mu_delta',
    'CharKind',
    'char_kind',
    'determinant_histogram',
    'sym_bruteforce',
    'sym_closed',
    'sym_psi'
]
