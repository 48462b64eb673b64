"""
Good Primes - T_j(p^2)-eigenvalues for p not dividing 2N and the eigenvalues of the transformed
operators T'_j(p^2), in closed product form or through the transform of the T_j values
"""
import logging
from fractions import Fraction
from typing import List, Literal

from counts.subspaces import beta
from counts.symmetric import sym_psi
from cusps.partitions import MultiplicativePartition
from errors import ArgumentError
from hecke.context import HalfIntegralContext
from ring.characters import legendre, odd_squarefree_primes
from ring.cyclotomic import CycNumber, gauss_g1, prime_power

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Mode = Literal['closed', 'via-transform']


def _check(ctx: HalfIntegralContext, sigma: MultiplicativePartition, j: int, p: int) -> None:
    ctx.require_good_prime(p)
    if sigma.N != ctx.N or sigma.n != ctx.n:
        raise ArgumentError(f"partition {sigma.label()} does not match the context")
    if not 0 <= j <= ctx.n:
        raise ArgumentError(f"j={j} outside 0..{ctx.n}")


def lambda_good(ctx: HalfIntegralContext, sigma: MultiplicativePartition, j: int, p: int) -> CycNumber:
    _check(ctx, sigma, j, p)
    if j == 0:
        return CycNumber.one()
    n, k, chi = ctx.n, ctx.k, ctx.chi
    last = odd_squarefree_primes(sigma.parts[-1])
    ratio = gauss_g1(p) * prime_power(p, Fraction(-1, 2))
    total = CycNumber.zero()
    for r in range(j + 1):
        for s in range(j - r + 1):
            size = j - r - s
            sym = sym_psi(p, size)
            if sym.is_zero():
                continue
            exponent = Fraction(k * (j - r + s), 2) - (j - r) * (n + 1)
            term = (prime_power(p, exponent)
                    * chi.power_value(p, j - r + s)
                    * chi.power_value(p, 2 * (r - s), last)
                    * ratio ** size
                    * sym)
            total = total + term.scale(beta(p, j, r) * beta(p, j - r, s))
    return total.scale(beta(p, n, j))


def _twisted_power(ctx: HalfIntegralContext, p: int, s: int) -> CycNumber:
    """chi'(p^s) = chi(p^s) eps^(s(k+1)/2), eps = (-1/p)"""
    sign = legendre(-1, p) ** (s * (ctx.k + 1) // 2)
    return ctx.chi.power_value(p, s).scale(sign)


def _lambda_prime_closed(ctx: HalfIntegralContext, sigma: MultiplicativePartition, j: int, p: int) -> CycNumber:
    n, k = ctx.n, ctx.k
    last = odd_squarefree_primes(sigma.parts[-1])
    unit = _twisted_power(ctx, p, 1) * ctx.chi.power_value(p, -2, last)
    product = CycNumber.one()
    for i in range(1, j + 1):
        product = product * (unit * prime_power(p, Fraction(k + 1, 2) - i) + 1)
    exponent = j * (Fraction(k, 2) - n - Fraction(1, 2)) + Fraction(j * (j - 1), 2)
    return (prime_power(p, exponent) * _twisted_power(ctx, p, j) * product).scale(beta(p, n, j))


def _lambda_prime_transform(ctx: HalfIntegralContext, sigma: MultiplicativePartition, j: int, p: int) -> CycNumber:
    n, k = ctx.n, ctx.k
    last = odd_squarefree_primes(sigma.parts[-1])
    plain: List[CycNumber] = [lambda_good(ctx, sigma, ell, p) for ell in range(j + 1)]
    tilde = []
    for m in range(j + 1):
        value = CycNumber.zero()
        for ell in range(m + 1):
            weight = beta(p, n - ell, m - ell)
            if weight == 0:
                continue
            shift = prime_power(p, Fraction((m - ell) * (k - 2 * n - 1), 2))
            value = value + (_twisted_power(ctx, p, m - ell) * shift * plain[ell]).scale(weight)
        tilde.append(value)
    total = CycNumber.zero()
    for i in range(j + 1):
        weight = beta(p, n - j + i, i)
        if weight == 0:
            continue
        sign = -1 if i % 2 else 1
        term = ctx.chi.power_value(p, 2 * i, last) * tilde[j - i]
        total = total + term.scale(sign * weight * p ** (i * (i - 1) // 2))
    return total


def lambda_prime(ctx: HalfIntegralContext, sigma: MultiplicativePartition, j: int, p: int,
                 mode: Mode = 'closed') -> CycNumber:
    """T'_j(p^2)-eigenvalue; both modes give the same exact value"""
    _check(ctx, sigma, j, p)
    if j == 0:
        return CycNumber.one()
    if mode == 'closed':
        return _lambda_prime_closed(ctx, sigma, j, p)
    if mode == 'via-transform':
        return _lambda_prime_transform(ctx, sigma, j, p)
    raise ArgumentError(f"unknown mode {mode}")
