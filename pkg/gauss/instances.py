"""
Instance Generation - seeded random unimodular, symmetric and symplectic integer matrices
Symplectic elements are words in translations [[I,Y],[0,I]], lower blocks [[I,0],[level*S,I]],
diag(G, tG^{-1}) and (at level 1) the involution [[0,-I],[I,0]]
"""
import logging
from typing import Callable, Optional, Tuple

import numpy as np
from sympy import Matrix, Rational, eye, zeros

from config import GAUSS_SUM_BUDGET, INSTANCE_ATTEMPTS
from matz.integer_matrix import is_coprime_symmetric

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Pair = Tuple[Matrix, Matrix]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_unimodular(n: int, rng: np.random.Generator, steps: int = 4) -> Matrix:
    """Product of elementary matrices I +/- e_ij, det 1"""
    E = eye(n)
    if n == 1:
        return E
    for _ in range(steps):
        i, j = rng.choice(n, size=2, replace=False)
        step = eye(n)
        step[int(i), int(j)] = int(rng.choice([-1, 1]))
        E = step * E
    return E


def random_symmetric(n: int, rng: np.random.Generator, bound: int = 1) -> Matrix:
    S = zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            S[i, j] = S[j, i] = int(rng.integers(-bound, bound + 1))
    return S


def _block(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Matrix:
    return A.row_join(B).col_join(C.row_join(D))


def random_symplectic(n: int, rng: np.random.Generator, level: int = 1, length: int = 4) -> Matrix:
    """
    Random 2n x 2n element of Sp_n(Z), in Gamma_0(level) when level > 1
    """
    I, O = eye(n), zeros(n, n)
    gamma = eye(2 * n)
    kinds = ['translate', 'lower', 'diag'] + (['involution'] if level == 1 else [])
    for _ in range(length):
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == 'translate':
            g = _block(I, random_symmetric(n, rng), O, I)
        elif kind == 'lower':
            g = _block(I, O, level * random_symmetric(n, rng), I)
        elif kind == 'diag':
            G = random_unimodular(n, rng, steps=2)
            g = _block(G, O, O, G.T.inv())
        else:
            g = _block(O, -I, I, O)
        gamma = gamma * g
    return gamma


def split_blocks(gamma: Matrix) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    n = gamma.rows // 2
    return gamma[:n, :n], gamma[:n, n:], gamma[n:, :n], gamma[n:, n:]


def random_coprime_pair(n: int, rng: np.random.Generator, level: int = 1,
                        max_det: Optional[int] = None) -> Pair:
    """Bottom row (C, D) of a random symplectic word with det D nonzero and |det D| <= max_det"""
    found = sample_pair(n, rng, level, lambda C, D: True, max_det)
    if found is None:
        raise RuntimeError(f"no coprime pair found for n={n}, level={level}")
    return found


def sample_pair(n: int, rng: np.random.Generator, level: int, accept: Callable[[Matrix, Matrix], bool],
                max_det: Optional[int] = None, attempts: Optional[int] = None) -> Optional[Pair]:
    """
    Rejection sampling of coprime symmetric pairs satisfying accept
    Returns: (C, D) or None when the attempt cap is hit
    """
    max_det = GAUSS_SUM_BUDGET if max_det is None else max_det
    attempts = INSTANCE_ATTEMPTS if attempts is None else attempts
    for _ in range(attempts):
        length = int(rng.integers(2, 6))
        _, _, C, D = split_blocks(random_symplectic(n, rng, level, length))
        det = D.det()
        if det == 0 or abs(det) > max_det:
            continue
        if accept(C, D):
            return C, D
    logger.warning(f"sample_pair: no instance after {attempts} attempts (n={n}, level={level})")
    return None


def random_gamma0_4(n: int, rng: np.random.Generator, min_imag: float, tau: np.ndarray,
                    attempts: Optional[int] = None) -> Optional[Matrix]:
    """
    Element of Gamma_0(4) with det D > 0 whose image of tau keeps lambda_min(Im) >= min_imag
    """
    attempts = INSTANCE_ATTEMPTS if attempts is None else attempts
    for _ in range(attempts):
        gamma = random_symplectic(n, rng, level=4, length=int(rng.integers(1, 4)))
        A, B, C, D = split_blocks(gamma)
        if D.det() <= 0 or not is_coprime_symmetric(C, D):
            continue
        a, b, c, d = (np.array(X.tolist(), dtype=float) for X in (A, B, C, D))
        image = (a @ tau + b) @ np.linalg.inv(c @ tau + d)
        imag = (image.imag + image.imag.T) / 2
        if np.linalg.eigvalsh(imag).min() >= min_imag:
            return gamma
    return None


def x_diag(n: int, q: int, s: int) -> Matrix:
    """X_s = diag(q I_s, I_(n-s))"""
    return Matrix.diag(*([q] * s + [1] * (n - s)))


def x0_diag(n: int, q: int, r: int) -> Matrix:
    """X_(0,r) = diag(I_(n-r), q^-1 I_r)"""
    return Matrix.diag(*([1] * (n - r) + [Rational(1, q)] * r))


def is_integral(M: Matrix) -> bool:
    return all(e.is_integer for e in M)


def _budget_ok(N: Matrix, budget: int) -> bool:
    det = N.det()
    return det != 0 and abs(det) <= budget


def sample_scaling_instance(n: int, q: int, s: int, rng: np.random.Generator) -> Optional[Pair]:
    """(M, N) with (X_s M X_s^-1, X_s N X_s) again an integral coprime symmetric pair"""
    X = x_diag(n, q, s)

    def accept(M: Matrix, N: Matrix) -> bool:
        M2, N2 = X * M * X.inv(), X * N * X
        return (is_integral(M2) and _budget_ok(N2, GAUSS_SUM_BUDGET)
                and is_coprime_symmetric(M2, N2))

    return sample_pair(n, rng, 1, accept)


def sample_mixed_instance(n: int, q: int, r: int, rng: np.random.Generator) -> Optional[Pair]:
    """
    (M, N) with (X_(0,r) M X_r^-1, X_(0,r) N X_r) integral coprime symmetric
    Sampled from the transformed side and pulled back, which makes M integral automatically
    """
    X, X0 = x_diag(n, q, r), x0_diag(n, q, r)

    def accept(M2: Matrix, N2: Matrix) -> bool:
        M, N = X0.inv() * M2 * X, X0.inv() * N2 * X.inv()
        return is_integral(M) and is_integral(N) and is_coprime_symmetric(M, N)

    found = sample_pair(n, rng, 1, accept)
    if found is None:
        return None
    M2, N2 = found
    return X0.inv() * M2 * X, X0.inv() * N2 * X.inv()


def column_blocks(M: Matrix, N: Matrix, l: int) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """B_2, B_3 from M = [[qB1, B2], [qB3, qB4]] (B_3 still carrying its factor q) and C_2, C_3 from N"""
    n = M.rows
    return M[:n - l, l:], M[n - l:, :l], N[:n - l, l:], N[n - l:, :l]


def sample_column_instance(n: int, q: int, l: int, rng: np.random.Generator) -> Optional[Pair]:
    """
    (M, N) = ([[qB1, B2], [qB3, qB4]], [[C1, C2], [C3, qC4]]) with B_3, C_3 invertible mod q
    Drawn at level q so the q-divisibility of M holds from the start
    """
    X = x_diag(n, q, l)

    def accept(M: Matrix, N: Matrix) -> bool:
        if any(int(e) % q for e in N[n - l:, l:]):
            return False
        _, B3q, _, C3 = column_blocks(M, N, l)
        if B3q.det() % (q ** (l + 1)) == 0 or C3.det() % q == 0:
            return False
        return _budget_ok(N * X, GAUSS_SUM_BUDGET)

    return sample_pair(n, rng, q, accept)
