"""
Admissible Types - cusp representatives for Gamma_0(4N): a multiplicative partition plus 2-adic data (d, d', eps)
Builds the sigma-type matrix M_sigma, classifies a symmetric matrix back to its type and decides vanishing
"""
import logging
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Matrix, zeros
from sympy.ntheory.modular import crt

from cusps.partitions import MultiplicativePartition, enumerate_partitions
from errors import ArgumentError
from matz.integer_matrix import rank_mod_p
from matz.quadratic import Jordan2Data, jordan_mod4
from ring.characters import DirichletCharacter, odd_squarefree_primes

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

NONVANISHING_ASSUMPTION = "character condition taken as sufficient for a nonzero series"


class AdmissibleType(BaseModel):
    """sigma = (partition, d, d', eps) with d + d' <= n"""
    model_config = ConfigDict(frozen=True)

    partition: MultiplicativePartition
    d: int = 0
    dprime: int = 0
    eps: Literal['+', '-'] = '+'

    @model_validator(mode='after')
    def check_type(self) -> 'AdmissibleType':
        Jordan2Data(d=self.d, dprime=self.dprime, eps=self.eps)
        if self.d + self.dprime > self.partition.n:
            raise ValueError(f"d + d' = {self.d + self.dprime} exceeds n = {self.partition.n}")
        return self

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def jordan(self) -> Jordan2Data:
        return Jordan2Data(d=self.d, dprime=self.dprime, eps=self.eps)

    def is_gamma0_4(self) -> bool:
        """(d, d', eps) = (0, 0, +): the cusp lies in the Gamma_0(4) orbit"""
        return self.d == 0 and self.dprime == 0 and self.eps == '+'

    def label(self) -> str:
        return f"{self.partition.label()}[{self.d},{self.dprime},{self.eps}]"


class VanishingStatus(BaseModel):
    """Zero carries a reason tag; Nonvanishing may carry the assumption it rests on"""
    value: Literal['zero', 'nonvanishing', 'undetermined']
    reason: Optional[Literal['character-square', 'plus-type']] = None
    assumption: Optional[str] = None

    @model_validator(mode='after')
    def check_reason(self) -> 'VanishingStatus':
        if (self.value == 'zero') != (self.reason is not None):
            raise ValueError("exactly the zero status carries a reason")
        return self

    def label(self) -> str:
        return f"zero({self.reason})" if self.value == 'zero' else self.value


def admissible_count(N: int, n: int) -> int:
    """(n+1)^omega(N) * sum over d + d' <= n of (2 if d' even and positive else 1)"""
    local = sum(2 if dp and dp % 2 == 0 else 1 for d in range(n + 1) for dp in range(n + 1 - d))
    return (n + 1) ** len(odd_squarefree_primes(N)) * local


def enumerate_admissible(N: int, n: int) -> List[AdmissibleType]:
    types = []
    for partition in enumerate_partitions(N, n):
        for d in range(n + 1):
            for dprime in range(n + 1 - d):
                signs = ['+', '-'] if dprime and dprime % 2 == 0 else ['+']
                types.extend(AdmissibleType(partition=partition, d=d, dprime=dprime, eps=eps) for eps in signs)
    logger.info(f"enumerate_admissible N={N} n={n}: {len(types)} types")
    return types


def _mod4_pattern(sigma: AdmissibleType) -> Matrix:
    """I_d + 2 I_d' (eps +) or I_d + 2 H^(d'/2) (eps -), zero elsewhere"""
    P = zeros(sigma.n, sigma.n)
    for i in range(sigma.d):
        P[i, i] = 1
    start = sigma.d
    if sigma.eps == '+':
        for i in range(start, start + sigma.dprime):
            P[i, i] = 2
    else:
        for i in range(start, start + sigma.dprime, 2):
            P[i, i + 1] = P[i + 1, i] = 2
    return P


def build_M_sigma(sigma: AdmissibleType) -> Matrix:
    """Symmetric M with M = I_s + 0 mod N_s for every slot s and the (d, d', eps) pattern mod 4, by entrywise CRT"""
    n = sigma.n
    pattern = _mod4_pattern(sigma)
    moduli = [4] + [part for part in sigma.partition.parts if part > 1]
    ranks = [s for s, part in enumerate(sigma.partition.parts) if part > 1]
    M = zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            residues = [int(pattern[i, j])] + [1 if i == j and i < s else 0 for s in ranks]
            value, _ = crt(moduli, residues)
            M[i, j] = M[j, i] = int(value)
    return M


def classify_cusp(M: Matrix, N: int) -> AdmissibleType:
    """Slot of q is rank_q(M); (d, d', eps) comes from the mod-4 Jordan data"""
    if M.rows != M.cols or M != M.T:
        raise ArgumentError("cusp matrix must be symmetric")
    n = M.rows
    parts = [1] * (n + 1)
    for q in odd_squarefree_primes(N):
        parts[rank_mod_p(M, q)] *= q
    jordan = jordan_mod4(M)
    return AdmissibleType(partition=MultiplicativePartition(parts=tuple(parts)),
                          d=jordan.d, dprime=jordan.dprime, eps=jordan.eps)


def vanishing_status(sigma: AdmissibleType, chi: DirichletCharacter) -> VanishingStatus:
    if chi.N != sigma.partition.N:
        raise ArgumentError(f"character modulus {chi.modulus} does not match level {4 * sigma.partition.N}")
    if sigma.dprime > 0 and sigma.eps == '+':
        return VanishingStatus(value='zero', reason='plus-type')
    if not sigma.is_gamma0_4():
        return VanishingStatus(value='undetermined')
    middle = sigma.partition.middle_product()
    for q in chi.primes:
        if middle % q == 0 and not chi.square_is_trivial_at(q):
            return VanishingStatus(value='zero', reason='character-square')
    return VanishingStatus(value='nonvanishing', assumption=NONVANISHING_ASSUMPTION)
