"""
Gauss package - generalized Gauss sums, theta numerics and the exact identity checks
"""
from .sums import gauss_sum, theta_multiplier
from .instances import (
    make_rng,
    random_coprime_pair,
    random_gamma0_4,
    random_symmetric,
    random_symplectic,
    random_unimodular,
    sample_column_instance,
    sample_mixed_instance,
    sample_scaling_instance,
    split_blocks,
    x0_diag,
    x_diag
)
from .identities import (
    VerificationReport,
    not_applicable,
    verify_column_scaling,
    verify_conjugation_scaling,
    verify_mixed_conjugation,
    verify_odd_cusp_sign,
    verify_unimodular_invariance
)
from .theta import (
    ThetaContext,
    s_cd_numeric,
    theta_numeric,
    verify_sl_invariance,
    verify_transformation,
    verify_translation_law
)

__all__ = [
    'gauss_sum',
    'theta_multiplier',
    'make_rng',
    'random_coprime_pair',
    'random_gamma0_4',
    'random_symmetric',
    'random_symplectic',
    'random_unimodular',
    'sample_column_instance',
    'sample_mixed_instance',
    'sample_scaling_instance',
    'split_blocks',
    'x0_diag',
    'x_diag',
    'VerificationReport',
    'not_applicable',
    'verify_column_scaling',
    'verify_conjugation_scaling',
    'verify_mixed_conjugation',
    'verify_odd_cusp_sign',
    'verify_unimodular_invariance',
    'ThetaContext',
    's_cd_numeric',
    'theta_numeric',
    'verify_sl_invariance',
    'verify_transformation',
    'verify_translation_law'
]
