"""
Symmetric Canonical Forms - 2-adic Jordan data mod 4 and diagonalization over F_q
"""
import logging
from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Matrix, eye

from errors import ArgumentError
from matz.integer_matrix import rank_mod_p

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class Jordan2Data(BaseModel):
    """Mod-4 class of a symmetric matrix: I_d + 2(I_d' or hyperbolic) + 0"""
    model_config = ConfigDict(frozen=True)

    d: int
    dprime: int
    eps: Literal['+', '-'] = '+'

    @model_validator(mode='after')
    def check_eps(self) -> 'Jordan2Data':
        if self.d < 0 or self.dprime < 0:
            raise ValueError("ranks must be nonnegative")
        if self.eps == '-' and (self.dprime == 0 or self.dprime % 2):
            raise ValueError("eps '-' needs a positive even dprime")
        return self

    def as_tuple(self) -> Tuple[int, int, str]:
        return self.d, self.dprime, self.eps


def _symmetric_rows(M: Matrix, modulus: int) -> List[List[int]]:
    if M.rows != M.cols or M != M.T:
        raise ArgumentError("matrix is not symmetric")
    return [[int(M[i, j]) % modulus for j in range(M.cols)] for i in range(M.rows)]


def _eliminate(A: List[List[int]], target: int, pivots: List[int], factors: List[int], modulus: int) -> None:
    """Congruence step: row/col target -= sum f * row/col pivot"""
    n = len(A)
    for f, p in zip(factors, pivots):
        if not f:
            continue
        for c in range(n):
            A[target][c] = (A[target][c] - f * A[p][c]) % modulus
        for r in range(n):
            A[r][target] = (A[r][target] - f * A[r][p]) % modulus


def _split_units(A: List[List[int]], active: List[int], modulus: int) -> int:
    """
    Split off unimodular 1x1 and 2x2 blocks (unit pivots) from the active index set
    Returns: total size of the split blocks; active keeps the indices left over
    """
    split = 0
    while active:
        odd_diag = next((p for p in active if A[p][p] % 2), None)
        if odd_diag is not None:
            inv = pow(A[odd_diag][odd_diag], -1, modulus)
            for i in active:
                if i != odd_diag:
                    _eliminate(A, i, [odd_diag], [A[i][odd_diag] * inv % modulus], modulus)
            active.remove(odd_diag)
            split += 1
            continue
        pair = next(((p, r) for p in active for r in active if p < r and A[p][r] % 2), None)
        if pair is None:
            break
        p, r = pair
        a, b, c = A[p][p], A[p][r], A[r][r]
        det_inv = pow((a * c - b * b) % modulus, -1, modulus)
        inv = [[c * det_inv % modulus, -b * det_inv % modulus],
               [-b * det_inv % modulus, a * det_inv % modulus]]
        for i in active:
            if i in pair:
                continue
            x, y = A[i][p], A[i][r]
            f1 = (x * inv[0][0] + y * inv[1][0]) % modulus
            f2 = (x * inv[0][1] + y * inv[1][1]) % modulus
            _eliminate(A, i, [p, r], [f1, f2], modulus)
        active.remove(p)
        active.remove(r)
        split += 2
    return split


def jordan_mod4(M: Matrix) -> Jordan2Data:
    """
    2-adic data (d, d', eps) of a symmetric integer matrix
    Unit pivoting runs mod 8; the remaining block is then even and its half is inspected mod 4 / mod 2
    """
    A = _symmetric_rows(M, 8)
    active = list(range(len(A)))
    d = _split_units(A, active, 8)
    half = Matrix([[A[i][j] // 2 for j in active] for i in active]) if active else Matrix([])
    dprime = rank_mod_p(half, 2) if active else 0
    odd_type = any(half[i, i] % 2 for i in range(half.rows)) if active else False
    eps = '+' if dprime == 0 or odd_type else '-'
    logger.debug(f"jordan_mod4: d={d} dprime={dprime} eps={eps}")
    return Jordan2Data(d=d, dprime=dprime, eps=eps)


def diagonalize_sym_mod_q(A: Matrix, q: int) -> Tuple[Matrix, List[int]]:
    """
    Congruence diagonalization over F_q, q odd
    Returns: (G, diag) with G * A * G^T = diag(diag) mod q
    """
    if q % 2 == 0:
        raise ArgumentError(f"q={q} must be odd")
    B = _symmetric_rows(A, q)
    n = len(B)
    G = [[int(e) for e in eye(n).row(i)] for i in range(n)]

    def swap(i: int, j: int) -> None:
        if i == j:
            return
        B[i], B[j] = B[j], B[i]
        for row in B:
            row[i], row[j] = row[j], row[i]
        G[i], G[j] = G[j], G[i]

    def add(target: int, source: int, factor: int) -> None:
        """Row/col target += factor * row/col source"""
        for c in range(n):
            B[target][c] = (B[target][c] + factor * B[source][c]) % q
        for r in range(n):
            B[r][target] = (B[r][target] + factor * B[r][source]) % q
        G[target] = [(x + factor * y) % q for x, y in zip(G[target], G[source])]

    for k in range(n):
        pivot = next((i for i in range(k, n) if B[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n) if i != j and B[i][j]), None)
            if pair is None:
                break
            # B_ii becomes 2 B_ij, a unit since q is odd
            add(pair[0], pair[1], 1)
            pivot = pair[0]
        swap(k, pivot)
        inv = pow(B[k][k], -1, q)
        for i in range(k + 1, n):
            if B[i][k]:
                add(i, k, -B[i][k] * inv % q)
    return Matrix(G), [B[i][i] for i in range(n)]
