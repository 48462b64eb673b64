"""
Character Pairs - character values chi(M, N) on diagonal pairs built from the X matrices and M_sigma
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Union

from sympy import Matrix

from cusps.partitions import MultiplicativePartition
from cusps.types import AdmissibleType, build_M_sigma
from errors import ArgumentError
from ring.characters import DirichletCharacter
from ring.cyclotomic import CycNumber, root_of_unity_from_turn

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Diagonal = Union[Matrix, Sequence[Fraction]]


def _diagonal(M: Diagonal) -> List[Fraction]:
    if isinstance(M, Matrix):
        if not M.is_square or any(M[i, j] != 0 for i in range(M.rows) for j in range(M.cols) if i != j):
            raise ArgumentError("character pairs must be diagonal")
        return [Fraction(int(M[i, i].p), int(M[i, i].q)) for i in range(M.rows)]
    return [Fraction(x) for x in M]


def x_diag_entries(n: int, q: int, s: int) -> List[Fraction]:
    """Diagonal of X_s = diag(q I_s, I_(n-s))"""
    return [Fraction(q)] * s + [Fraction(1)] * (n - s)


def x_sr_inverse_entries(n: int, q: int, s: int, r: int) -> List[Fraction]:
    """Diagonal of X_(s,r)^-1 = diag(q^-1 I_s, I, q I_r)"""
    if s < 0 or r < 0 or s + r > n:
        raise ArgumentError(f"X_(s,r) needs s, r >= 0 and s + r <= n, got s={s} r={r} n={n}")
    return [Fraction(1, q)] * s + [Fraction(1)] * (n - s - r) + [Fraction(q)] * r


def m_sigma_entries(partition: MultiplicativePartition) -> List[Fraction]:
    """Diagonal of M_sigma for the (sigma, 0, 0, +) type"""
    M = build_M_sigma(AdmissibleType(partition=partition))
    return [Fraction(int(M[i, i])) for i in range(M.rows)]


def char_pair_eval(chi: DirichletCharacter, moduli: Sequence[int], M: Diagonal, N: Diagonal) -> CycNumber:
    """
    Product over m in moduli of chi_m(M, N)
    For a prime m: chi_m(det M_1^-1 * det N_4) where M_1 collects the diagonal entries prime to m
    and N_4 the entries of N opposite the rest; for m = 4: chi_4(det N)
    """
    m_diag, n_diag = _diagonal(M), _diagonal(N)
    if len(m_diag) != len(n_diag):
        raise ArgumentError("pair blocks have different sizes")
    total = Fraction(0)
    for m in moduli:
        if m == 4:
            argument = Fraction(1)
            for x in n_diag:
                argument *= x
        else:
            argument = Fraction(1)
            for x, y in zip(m_diag, n_diag):
                if x.numerator % m:
                    argument /= x
                else:
                    argument *= y
        turn = chi.component_turn(m, argument)
        if turn is None:
            raise ArgumentError(f"pair entries are not units at {m}: {argument}")
        total += turn
    return root_of_unity_from_turn(total % 1)
