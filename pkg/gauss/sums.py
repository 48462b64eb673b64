"""
Generalized Gauss Sums - exact G_C(D) by coset enumeration and the theta multiplier conj(G_C(D))/sqrt(det D)
"""
import logging
from typing import Optional

import numpy as np
from sympy import Matrix

from config import GAUSS_CHUNK_SIZE, GAUSS_SUM_BUDGET
from errors import ArgumentError, BudgetExceededError, SingularMatrixError
from matz.integer_matrix import coset_basis, is_coprime_symmetric, to_rows
from ring.cyclotomic import CycNumber, sqrt_integer

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _exponents(moduli, W: np.ndarray, A: np.ndarray, m: int, start: int, stop: int) -> np.ndarray:
    """U A tU mod m for the representatives with mixed-radix index in [start, stop)"""
    index = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(index), len(moduli)), dtype=np.int64)
    for i, s in enumerate(moduli):
        digits[:, i] = index % s
        index //= s
    U = (digits @ W) % m
    UA = (U @ A) % m
    return np.einsum('ki,ki->k', UA, U) % m


def gauss_sum(C: Matrix, D: Matrix, budget: Optional[int] = None) -> CycNumber:
    """
    G_C(D) = sum over U in Z^{1,n}/Z^{1,n}D of exp(2 pi i U D^{-1}C tU)
    Each term is zeta_|det D|^(sign(det D) * U adj(D) C tU)
    """
    budget = GAUSS_SUM_BUDGET if budget is None else budget
    det = int(D.det())
    if det == 0:
        raise SingularMatrixError("singular D")
    if not is_coprime_symmetric(C, D):
        raise ArgumentError("(C D) is not a coprime symmetric pair")
    m = abs(det)
    if m > budget:
        raise BudgetExceededError(f"|det D| = {m} exceeds the Gauss sum budget {budget}")
    if m == 1:
        return CycNumber.one()
    moduli, W = coset_basis(D)
    A = np.array(to_rows(D.adjugate() * C), dtype=object)
    A = np.array((A % m).tolist(), dtype=np.int64)
    W = np.array(to_rows(W), dtype=object)
    W = np.array((W % m).tolist(), dtype=np.int64)
    sign = 1 if det > 0 else -1
    counts = np.zeros(m, dtype=np.int64)
    for start in range(0, m, GAUSS_CHUNK_SIZE):
        exps = _exponents(moduli, W, A, m, start, min(start + GAUSS_CHUNK_SIZE, m))
        counts += np.bincount((sign * exps) % m, minlength=m)
    logger.debug(f"gauss_sum: {m} representatives, moduli {moduli}")
    return CycNumber.from_exponent_counts(m, counts.tolist())


def theta_multiplier(C: Matrix, D: Matrix, budget: Optional[int] = None) -> CycNumber:
    """conj(G_C(D)) / sqrt(det D) for 4 | C, with sqrt(det D) = i sqrt(|det D|) when det D < 0"""
    if any(int(c) % 4 for c in C):
        raise ArgumentError("theta multiplier needs C divisible by 4")
    g = gauss_sum(C, D, budget)
    return g.conj() / sqrt_integer(int(D.det()))
