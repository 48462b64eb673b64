"""
Multiplicative Partitions - ordered tuples (N_0, ..., N_n) of coprime factors of an odd squarefree N
Prime q sitting in N_s means the cusp matrix has rank s modulo q
"""
import itertools
import logging
from math import gcd, prod
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from errors import ArgumentError
from ring.characters import odd_squarefree_primes

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class MultiplicativePartition(BaseModel):
    """(N_0, ..., N_n) with pairwise coprime squarefree parts"""
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...]

    @field_validator('parts')
    @classmethod
    def check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if not parts:
            raise ValueError("a partition needs at least one slot")
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        for a, b in itertools.combinations(parts, 2):
            if gcd(a, b) != 1:
                raise ValueError(f"parts {a} and {b} are not coprime")
        odd_squarefree_primes(prod(parts))
        return parts

    @property
    def N(self) -> int:
        return prod(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts) - 1

    def slot_of(self, q: int) -> int:
        for s, part in enumerate(self.parts):
            if part % q == 0:
                return s
        raise ArgumentError(f"{q} does not divide N={self.N}")

    def slots(self) -> Dict[int, int]:
        """prime -> slot index"""
        return {q: self.slot_of(q) for q in odd_squarefree_primes(self.N)}

    def without_prime(self, q: int) -> 'MultiplicativePartition':
        s = self.slot_of(q)
        parts = list(self.parts)
        parts[s] //= q
        return MultiplicativePartition(parts=tuple(parts))

    def with_prime(self, q: int, slot: int) -> 'MultiplicativePartition':
        if self.N % q == 0:
            raise ArgumentError(f"{q} already divides N={self.N}")
        parts = list(self.parts)
        parts[slot] *= q
        return MultiplicativePartition(parts=tuple(parts))

    def dominates(self, other: 'MultiplicativePartition') -> bool:
        """Rank order: every prime sits in a slot at least as high as in other"""
        mine = self.slots()
        return all(mine[q] >= s for q, s in other.slots().items())

    def middle_product(self) -> int:
        """N_1 ... N_(n-1)"""
        return prod(self.parts[1:-1]) if self.n >= 2 else 1

    def label(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partition_from_slots(N: int, n: int, slots: Dict[int, int]) -> MultiplicativePartition:
    parts = [1] * (n + 1)
    for q, s in slots.items():
        if not 0 <= s <= n:
            raise ArgumentError(f"slot {s} outside 0..{n}")
        parts[s] *= q
    partition = MultiplicativePartition(parts=tuple(parts))
    if partition.N != N:
        raise ArgumentError(f"slots {slots} do not cover N={N}")
    return partition


def enumerate_partitions(N: int, n: int) -> List[MultiplicativePartition]:
    """All (n+1)^omega(N) partitions, ordered lexicographically by the slot of each prime (ascending primes)"""
    if n < 0:
        raise ArgumentError(f"degree n={n} must be nonnegative")
    primes = odd_squarefree_primes(N)
    partitions = [partition_from_slots(N, n, dict(zip(primes, assignment)))
                  for assignment in itertools.product(range(n + 1), repeat=len(primes))]
    logger.debug(f"enumerate_partitions N={N} n={n}: {len(partitions)}")
    return partitions
