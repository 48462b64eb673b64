"""
Cusps package - multiplicative partitions and admissible cusp types for Gamma_0(4N)
"""
from .partitions import MultiplicativePartition, enumerate_partitions, partition_from_slots
from .types import (
    AdmissibleType,
    VanishingStatus,
    admissible_count,
    build_M_sigma,
    classify_cusp,
    enumerate_admissible,
    vanishing_status
)

__all__ = [
    'MultiplicativePartition',
    'enumerate_partitions',
    'partition_from_slots',
    'AdmissibleType',
    'VanishingStatus',
    'admissible_count',
    'build_M_sigma',
    'classify_cusp',
    'enumerate_admissible',
    'vanishing_status'
]
