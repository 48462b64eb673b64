"""
Integral Weight - eigenvalues of the integral-weight Eisenstein series E'_sigma (weight k', character chi' mod N)
and the degree-one comparison with the half-integral T_1(p^2) eigenvalues
"""
import logging
from math import gcd
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from counts.subspaces import beta
from counts.symmetric import CharKind, sym_closed
from cusps.partitions import MultiplicativePartition
from errors import ArgumentError
from hecke.context import HalfIntegralContext
from hecke.good_primes import lambda_good
from hecke.pairs import char_pair_eval, m_sigma_entries, x_diag_entries
from ring.characters import DirichletCharacter, odd_squarefree_primes
from ring.cyclotomic import CycNumber, prime_power

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

IntegralKind = Literal['Tq', 'Tjq2', 'Tp', 'Tjp2']


def _tq(sigma: MultiplicativePartition, q: int, k_int: int, chi_int: DirichletCharacter) -> CycNumber:
    n, d = sigma.n, sigma.slot_of(q)
    xd = x_diag_entries(n, q, d)
    pair_m = [x * m / q for x, m in zip(xd, m_sigma_entries(sigma))]
    moduli = odd_squarefree_primes(sigma.N // q)
    return prime_power(q, k_int * d - d * (d + 1) // 2) * char_pair_eval(chi_int, moduli, pair_m, xd)


def _tjq2(sigma: MultiplicativePartition, q: int, j: int, k_int: int, chi_int: DirichletCharacter) -> CycNumber:
    n, d = sigma.n, sigma.slot_of(q)
    first = odd_squarefree_primes(sigma.parts[0] // gcd(sigma.parts[0], q))
    last = odd_squarefree_primes(sigma.parts[-1] // gcd(sigma.parts[-1], q))
    total = CycNumber.zero()
    for s in range(j + 1):
        weight = beta(q, d, s) * beta(q, n - d, j - s)
        if weight == 0:
            continue
        term = (prime_power(q, j * d + s * (2 * k_int - 2 * d + s - j - 1))
                * chi_int.power_value(q, 2 * s, first)
                * chi_int.power_value(q, 2 * (j - s), last))
        total = total + term.scale(weight)
    return total


def _tp(sigma: MultiplicativePartition, p: int, k_int: int, chi_int: DirichletCharacter) -> CycNumber:
    n = sigma.n
    value = CycNumber.one()
    for d in range(1, n + 1):
        value = value * chi_int.power_value(p, d, odd_squarefree_primes(sigma.parts[d]))
    unit = chi_int.value(p, chi_int.primes) * chi_int.power_value(p, -2, odd_squarefree_primes(sigma.parts[-1]))
    for i in range(1, n + 1):
        value = value * (unit * prime_power(p, k_int - i) + 1)
    return value


def _tjp2(sigma: MultiplicativePartition, p: int, j: int, k_int: int, chi_int: DirichletCharacter) -> CycNumber:
    n = sigma.n
    last = odd_squarefree_primes(sigma.parts[-1])
    total = CycNumber.zero()
    for r in range(j + 1):
        for s in range(j - r + 1):
            sym = sym_closed(p, CharKind.TRIVIAL, j - r - s, 0)
            if sym.is_zero():
                continue
            term = (prime_power(p, k_int * (j - r + s) - (j - r) * (n + 1))
                    * chi_int.power_value(p, j - r + s, chi_int.primes)
                    * chi_int.power_value(p, 2 * (r - s), last)
                    * sym)
            total = total + term.scale(beta(p, j, r) * beta(p, j - r, s))
    return total.scale(beta(p, n, j))


def lambda_integral(kind: IntegralKind, sigma: MultiplicativePartition, prime: int, k_int: int,
                    chi_int: DirichletCharacter, j: Optional[int] = None) -> CycNumber:
    """
    Eigenvalue of E'_sigma under T(q), T_j(q^2) for q | N, or T(p), T_j(p^2) for p prime to N

    Args:
        k_int: integral weight k'
        chi_int: character mod N; a 4-component, if any, is ignored
        j: operator index for the T_j kinds
    """
    if k_int < 1:
        raise ArgumentError(f"weight k'={k_int} must be positive")
    if chi_int.N != sigma.N:
        raise ArgumentError(f"character modulus does not match level N={sigma.N}")
    bad = sigma.N % prime == 0
    if kind in ('Tq', 'Tjq2') and not bad:
        raise ArgumentError(f"{kind} needs a prime dividing N={sigma.N}, got {prime}")
    if kind in ('Tp', 'Tjp2') and (bad or prime == 2):
        raise ArgumentError(f"{kind} needs an odd prime not dividing N={sigma.N}, got {prime}")
    if kind in ('Tjq2', 'Tjp2') and (j is None or not 0 <= j <= sigma.n):
        raise ArgumentError(f"{kind} needs 0 <= j <= {sigma.n}, got {j}")
    if kind == 'Tq':
        return _tq(sigma, prime, k_int, chi_int)
    if kind == 'Tjq2':
        return _tjq2(sigma, prime, j, k_int, chi_int)
    if kind == 'Tp':
        return _tp(sigma, prime, k_int, chi_int)
    if kind == 'Tjp2':
        return _tjp2(sigma, prime, j, k_int, chi_int)
    raise ArgumentError(f"unknown integral operator {kind}")


class ShimuraRow(BaseModel):
    sigma: str
    half_integral: Dict
    integral: Dict
    equal: bool


class ShimuraReport(BaseModel):
    N: int
    k: int
    prime: int
    character: str
    passed: bool
    rows: List[ShimuraRow] = Field(default_factory=list)


def shimura_compare(N: int, k: int, chi: Optional[DirichletCharacter], p: int) -> ShimuraReport:
    """Degree one: T_1(p^2) on E_sigma at (k, chi) against T(p) on E'_sigma at (k - 1, chi^2)"""
    ctx = HalfIntegralContext.build(1, k, N, chi)
    ctx.require_good_prime(p)
    chi_int = ctx.chi.square()
    rows = []
    for sigma in ctx.partitions():
        lhs = lambda_good(ctx, sigma, 1, p)
        rhs = lambda_integral('Tp', sigma, p, k - 1, chi_int)
        rows.append(ShimuraRow(sigma=sigma.label(), half_integral=lhs.to_dict(), integral=rhs.to_dict(), equal=lhs == rhs))
    passed = all(row.equal for row in rows)
    if not passed:
        logger.error(f"shimura comparison failed for N={N} k={k} p={p}")
    return ShimuraReport(N=N, k=k, prime=p, character=ctx.chi.describe(), passed=passed, rows=rows)
