"""
Hecke package - bad-prime and good-prime eigenvalues, the recombined basis and integral-weight companions
"""
from .context import EigenvalueRow, EigenvalueTable, HalfIntegralContext
from .pairs import char_pair_eval, m_sigma_entries, x_diag_entries, x_sr_inverse_entries
from .bad_primes import (
    A_coeff,
    MultiplicityReport,
    TildeBasis,
    apply_bad_operator,
    bad_prime_matrix,
    eigen_residual_free,
    lambda_bad,
    multiplicity_one_check,
    tilde_basis
)
from .good_primes import lambda_good, lambda_prime
from .integral import ShimuraReport, lambda_integral, shimura_compare
from .tables import OPERATORS, eigen_table

__all__ = [
    'EigenvalueRow',
    'EigenvalueTable',
    'HalfIntegralContext',
    'char_pair_eval',
    'm_sigma_entries',
    'x_diag_entries',
    'x_sr_inverse_entries',
    'A_coeff',
    'MultiplicityReport',
    'TildeBasis',
    'apply_bad_operator',
    'bad_prime_matrix',
    'eigen_residual_free',
    'lambda_bad',
    'multiplicity_one_check',
    'tilde_basis',
    'lambda_good',
    'lambda_prime',
    'ShimuraReport',
    'lambda_integral',
    'shimura_compare',
    'OPERATORS',
    'eigen_table'
]
