"""
Subspace Counts - mu_q, delta_q and the Gaussian binomial beta_q
"""
import itertools
import logging
from functools import lru_cache
from typing import Tuple

from errors import ArgumentError

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def mu_delta(q: int, b: int, c: int) -> Tuple[int, int]:
    """
    mu_q(b,c) = prod_{i<c} (q^(b-i) - 1) and delta_q(b,c) = prod_{i<c} (q^(b-i) + 1)
    Returns: (mu, delta), both 1 for c = 0
    """
    if c < 0 or c > b:
        raise ArgumentError(f"mu_delta needs 0 <= c <= b, got b={b}, c={c}")
    mu, delta = 1, 1
    for i in range(c):
        mu *= q ** (b - i) - 1
        delta *= q ** (b - i) + 1
    return mu, delta


@lru_cache(maxsize=4096)
def beta(q: int, b: int, c: int) -> int:
    """Number of c-dimensional subspaces of F_q^b; 0 outside 0 <= c <= b"""
    if b < 0 or c < 0 or c > b:
        return 0
    return mu_delta(q, b, c)[0] // mu_delta(q, c, c)[0]


def count_subspaces(q: int, b: int, c: int) -> int:
    """
    Exhaustive count of reduced row echelon c x b matrices over F_q
    One per subspace, so this is an independent check on beta
    """
    if c < 0 or c > b:
        return 0
    total = 0
    for pivots in itertools.combinations(range(b), c):
        free = sum(1 for row, col in enumerate(pivots)
                   for j in range(col + 1, b) if j not in pivots)
        total += q ** free
    return total
