"""
Integer Matrix Toolkit - ranks mod p, Smith normal form, coset representatives and coprime symmetric pairs
Matrices are sympy Matrix objects with integer entries
"""
import itertools
import logging
from typing import Iterator, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors, smith_normal_decomp
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from errors import ArgumentError, SingularMatrixError

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def int_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    """Build an integer Matrix, rejecting non-integral entries"""
    M = Matrix(rows)
    if M.rows == 0 or M.cols == 0:
        raise ArgumentError("matrix dimensions must be positive")
    if any(not e.is_integer for e in M):
        raise ArgumentError("matrix entries must be integers")
    return M


def to_rows(M: Matrix) -> Rows:
    return tuple(tuple(int(M[i, j]) for j in range(M.cols)) for i in range(M.rows))


def rank_mod_p(M: Matrix, p: int) -> int:
    """Row rank of M over Z/pZ"""
    return int(DomainMatrix.from_Matrix(M).convert_to(GF(p)).rank())


def smith_normal_form(M: Matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """
    Smith decomposition of an integer matrix
    Returns: (U, S, V) with U, V unimodular and S = U * M * V diagonal, s_i | s_(i+1)
    """
    S, U, V = smith_normal_decomp(M, domain=ZZ)
    return U, S, V


def coset_basis(D: Matrix) -> Tuple[List[int], Matrix]:
    """
    Data describing Z^{1,n} / Z^{1,n} D
    Returns: (moduli s_i, W) so the representatives are v * W with 0 <= v_i < s_i
    """
    if D.det() == 0:
        raise SingularMatrixError("singular D")
    _, S, V = smith_normal_form(D)
    moduli = [abs(int(S[i, i])) for i in range(D.rows)]
    # row lattice Z^n D = (Z^n S) V^{-1}
    W = V.inv().applyfunc(int)
    return moduli, W


def coset_reps(D: Matrix) -> Iterator[Tuple[int, ...]]:
    """Exactly |det D| pairwise incongruent representatives of Z^{1,n} / Z^{1,n} D"""
    moduli, W = coset_basis(D)
    W_np = np.array(to_rows(W), dtype=object)
    for v in itertools.product(*(range(s) for s in moduli)):
        yield tuple(int(x) for x in np.dot(np.array(v, dtype=object), W_np))


def in_row_lattice(u: Sequence[int], D: Matrix) -> bool:
    """True iff u = x D for an integral row vector x"""
    x = Matrix([list(u)]) * D.inv()
    return all(e.is_integer for e in x)


def is_coprime_symmetric(C: Matrix, D: Matrix) -> bool:
    """C tD symmetric and the n-th determinantal divisor of (C D) equal to 1"""
    if C.shape != D.shape or C.rows != C.cols:
        raise ArgumentError("C and D must be square of the same size")
    if C * D.T != D * C.T:
        return False
    factors = invariant_factors(C.row_join(D), domain=ZZ)
    return len(factors) == C.rows and all(abs(int(f)) == 1 for f in factors)


class CoprimePair(BaseModel):
    """Coprime symmetric pair (C D), the bottom block row of a symplectic matrix"""
    model_config = ConfigDict(frozen=True)

    C: Rows
    D: Rows

    @model_validator(mode='after')
    def check_pair(self) -> 'CoprimePair':
        if not is_coprime_symmetric(int_matrix(self.C), int_matrix(self.D)):
            raise ValueError("(C D) is not a coprime symmetric pair")
        return self

    @classmethod
    def of(cls, C: Matrix, D: Matrix) -> 'CoprimePair':
        return cls(C=to_rows(C), D=to_rows(D))

    @property
    def n(self) -> int:
        return len(self.C)

    def matrices(self) -> Tuple[Matrix, Matrix]:
        return int_matrix(self.C), int_matrix(self.D)
