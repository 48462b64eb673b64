"""
Matz package - integer and finite-ring linear algebra
"""
from .integer_matrix import (
    CoprimePair,
    coset_basis,
    coset_reps,
    in_row_lattice,
    int_matrix,
    is_coprime_symmetric,
    rank_mod_p,
    smith_normal_form,
    to_rows
)
from .quadratic import Jordan2Data, diagonalize_sym_mod_q, jordan_mod4

__all__ = [
    'CoprimePair',
    'coset_basis',
    'coset_reps',
    'in_row_lattice',
    'int_matrix',
    'is_coprime_symmetric',
    'rank_mod_p',
    'smith_normal_form',
    'to_rows',
    'Jordan2Data',
    'diagonalize_sym_mod_q',
    'jordan_mod4'
]
