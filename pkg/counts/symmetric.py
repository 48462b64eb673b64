"""
Symmetric Matrix Character Sums - sym_q^chi(b,c) in closed form and by exhaustive enumeration
sym_q^chi(b,c) sums chi_q(det [[mu, nu], [nu^T, 0]]) over symmetric mu in F_q^{b,b} and nu in F_q^{b,c}
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np
from tqdm import tqdm

from config import SHOW_PROGRESS, SYM_BRUTEFORCE_BUDGET, SYM_CHUNK_SIZE
from counts.subspaces import mu_delta
from errors import ArgumentError, BudgetExceededError
from ring.characters import DirichletCharacter, legendre
from ring.cyclotomic import CycNumber, cyc_sum

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class CharKind(str, Enum):
    """Local character component at q, as seen by sym_q"""
    TRIVIAL = 'trivial'
    QUADRATIC = 'quadratic'
    HIGHER = 'higher'

    def twisted(self) -> 'CharKind':
        """Kind of chi_q * (./q)"""
        if self is CharKind.TRIVIAL:
            return CharKind.QUADRATIC
        if self is CharKind.QUADRATIC:
            return CharKind.TRIVIAL
        return CharKind.HIGHER


def char_kind(chi: DirichletCharacter, q: int) -> CharKind:
    order = chi.order_at(q)
    if order == 1:
        return CharKind.TRIVIAL
    if order == 2:
        return CharKind.QUADRATIC
    return CharKind.HIGHER


def sym_closed(q: int, kind: CharKind, b: int, c: int) -> CycNumber:
    """Closed form of sym_q^chi(b,c); negative sizes give 0"""
    if q % 2 == 0:
        raise ArgumentError(f"q={q} must be odd")
    if b < 0 or c < 0:
        return CycNumber.zero()
    if b == 0 and c == 0:
        return CycNumber.one()
    if kind is CharKind.HIGHER:
        return CycNumber.zero()
    m = (b + c) // 2
    if c > m:
        return CycNumber.zero()
    even = (b + c) % 2 == 0
    if not even and kind is CharKind.QUADRATIC:
        return CycNumber.zero()
    ratio = Fraction(mu_delta(q, b, b)[0])
    mu, delta = mu_delta(q, m - c, m - c)
    ratio /= mu * delta
    if kind is CharKind.TRIVIAL:
        power = m * m + m - c if even else m * m + m
        return CycNumber.from_rational(ratio * q ** power)
    sign = legendre(-1, q) ** m
    return CycNumber.from_rational(ratio * sign * q ** (m * m))


def sym_psi(p: int, size: int) -> CycNumber:
    """sym_p^psi(size) with psi the Legendre symbol mod p"""
    return sym_closed(p, CharKind.QUADRATIC, size, 0)


def determinant_histogram(q: int, b: int, c: int) -> np.ndarray:
    """
    Counts of det [[mu, nu], [nu^T, 0]] mod q over every symmetric mu and every nu
    Returns: int64 array of length q indexed by the residue
    """
    size = b + c
    upper = [(i, j) for i in range(b) for j in range(i, b)]
    border = [(i, b + j) for i in range(b) for j in range(c)]
    slots = upper + border
    total = q ** len(slots)
    if total > SYM_BRUTEFORCE_BUDGET:
        raise BudgetExceededError(f"{total} bordered matrices exceed the budget {SYM_BRUTEFORCE_BUDGET}")
    histogram = np.zeros(q, dtype=np.int64)
    if size == 0:
        histogram[1 % q] = 1
        return histogram
    rows = np.array([s[0] for s in slots], dtype=np.int64)
    cols = np.array([s[1] for s in slots], dtype=np.int64)
    powers = q ** np.arange(len(slots), dtype=np.int64)
    starts = range(0, total, SYM_CHUNK_SIZE)
    for start in tqdm(starts, desc=f"sym {q}:{b},{c}", disable=not SHOW_PROGRESS or len(starts) < 8):
        index = np.arange(start, min(start + SYM_CHUNK_SIZE, total), dtype=np.int64)
        # centred digits keep the float determinants small
        digits = (index[:, None] // powers[None, :]) % q
        digits = np.where(digits > q // 2, digits - q, digits).astype(np.float64)
        mats = np.zeros((len(index), size, size))
        if len(slots):
            mats[:, rows, cols] = digits
            mats[:, cols, rows] = digits
        dets = np.rint(np.linalg.det(mats)).astype(np.int64) % q
        histogram += np.bincount(dets, minlength=q)
    return histogram


def sym_bruteforce(q: int, kind: CharKind, b: int, c: int,
                   chi: Optional[DirichletCharacter] = None) -> CycNumber:
    """
    Exhaustive sym_q^chi(b,c)
    The HIGHER kind needs the actual character chi to evaluate its component at q
    """
    if q % 2 == 0:
        raise ArgumentError(f"q={q} must be odd")
    if b < 0 or c < 0:
        return CycNumber.zero()
    if b == 0 and c == 0:
        return CycNumber.one()
    histogram = determinant_histogram(q, b, c)
    logger.debug(f"sym_bruteforce q={q} b={b} c={c}: {int(histogram.sum())} matrices")
    if kind is CharKind.TRIVIAL:
        return CycNumber.from_rational(int(histogram[1:].sum()))
    if kind is CharKind.QUADRATIC:
        return CycNumber.from_rational(sum(legendre(a, q) * int(histogram[a]) for a in range(1, q)))
    if chi is None:
        raise ArgumentError("a higher order component needs the character itself")
    return cyc_sum(chi.value(a, [q]).scale(int(histogram[a])) for a in range(1, q) if histogram[a])
