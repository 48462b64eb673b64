"""
Config package - exports configuration variables
"""
from .config import (
    GAUSS_SUM_BUDGET,
    GAUSS_CHUNK_SIZE,
    SYM_BRUTEFORCE_BUDGET,
    SYM_CHUNK_SIZE,
    THETA_TAIL_BOUND,
    THETA_MAX_RADIUS,
    NUMERIC_TOLERANCE,
    BRANCH_STEPS,
    BRANCH_REFINE_LIMIT,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    UNIMODULAR_PAIRS,
    UNIMODULAR_E_PER_PAIR,
    INSTANCE_ATTEMPTS,
    MAX_WORKERS,
    SHOW_PROGRESS,
    LOG_LEVEL,
    SCHEMA_VERSION,
    APPROX_DIGITS
)

__all__ = [
    'GAUSS_SUM_BUDGET',
    'GAUSS_CHUNK_SIZE',
    'SYM_BRUTEFORCE_BUDGET',
    'SYM_CHUNK_SIZE',
    'THETA_TAIL_BOUND',
    'THETA_MAX_RADIUS',
    'NUMERIC_TOLERANCE',
    'BRANCH_STEPS',
    'BRANCH_REFINE_LIMIT',
    'DEFAULT_SEED',
    'DEFAULT_TRIALS',
    'UNIMODULAR_PAIRS',
    'UNIMODULAR_E_PER_PAIR',
    'INSTANCE_ATTEMPTS',
    'MAX_WORKERS',
    'SHOW_PROGRESS',
    'LOG_LEVEL',
    'SCHEMA_VERSION',
    'APPROX_DIGITS'
]
