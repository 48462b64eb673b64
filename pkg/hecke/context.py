"""
Hecke Context - weight, level and character shared by every eigenvalue formula, and the table records
"""
import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime

from cusps.partitions import MultiplicativePartition, enumerate_partitions
from cusps.types import AdmissibleType, VanishingStatus, vanishing_status
from errors import ArgumentError
from ring.characters import DirichletCharacter, odd_squarefree_primes

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

FORMAL_RANGE_NOTE = "n <= (k+1)/2: the series do not converge, eigenvalues are formal"


class HalfIntegralContext(BaseModel):
    """Degree n, weight k/2 (k odd), level 4N with N odd squarefree, character chi mod 4N"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    N: int = Field(ge=1)
    chi: DirichletCharacter

    @model_validator(mode='after')
    def check_context(self) -> 'HalfIntegralContext':
        if self.k % 2 == 0:
            raise ValueError(f"k={self.k} must be odd")
        odd_squarefree_primes(self.N)
        if self.chi.N != self.N:
            raise ValueError(f"character modulus {self.chi.modulus} does not match level {4 * self.N}")
        if self.formal:
            logger.warning(f"context n={self.n} k={self.k}: {FORMAL_RANGE_NOTE}")
        return self

    @classmethod
    def build(cls, n: int, k: int, N: int, chi: Optional[DirichletCharacter] = None) -> 'HalfIntegralContext':
        return cls(n=n, k=k, N=N, chi=chi or DirichletCharacter.trivial(N))

    @property
    def formal(self) -> bool:
        return 2 * self.n <= self.k + 1

    @property
    def primes(self):
        return odd_squarefree_primes(self.N)

    @property
    def even_character(self) -> bool:
        return self.chi.parity() == 1

    def require_even_character(self) -> None:
        if not self.even_character:
            raise ArgumentError("bad-prime eigenvalues need chi(-1) = 1")

    def require_bad_prime(self, q: int) -> None:
        if q not in self.primes:
            raise ArgumentError(f"{q} does not divide N={self.N}")

    def require_good_prime(self, p: int) -> None:
        if p == 2 or self.N % p == 0:
            raise ArgumentError(f"p={p} must be an odd prime not dividing N={self.N}")
        if not isprime(p):
            raise ArgumentError(f"p={p} is not prime")

    def partitions(self) -> List[MultiplicativePartition]:
        return enumerate_partitions(self.N, self.n)

    def status(self, sigma: MultiplicativePartition) -> VanishingStatus:
        """Vanishing status of E_sigma, the Gamma_0(4)-generated series of type (sigma, 0, 0, +)"""
        return vanishing_status(AdmissibleType(partition=sigma), self.chi)

    def is_zero(self, sigma: MultiplicativePartition) -> bool:
        return self.status(sigma).value == 'zero'

    def describe(self) -> Dict[str, Any]:
        notes = [FORMAL_RANGE_NOTE] if self.formal else []
        return {'n': self.n, 'k': self.k, 'N': self.N, 'character': self.chi.describe(), 'notes': notes}


class EigenvalueRow(BaseModel):
    """One table cell: operator kind at a prime and index j acting on one partition"""
    sigma: str
    op: str
    prime: int
    j: int
    status: str
    value: Optional[Dict[str, Any]] = None


class EigenvalueTable(BaseModel):
    context: Dict[str, Any]
    op: str
    prime: int
    j: int
    rows: List[EigenvalueRow] = Field(default_factory=list)
