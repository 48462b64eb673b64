"""
Eigenvalue Tables - one row per partition for a chosen operator kind, prime and index
"""
import logging
from typing import Callable, Dict, Optional

from cusps.partitions import MultiplicativePartition
from errors import ArgumentError
from hecke.bad_primes import lambda_bad
from hecke.context import EigenvalueRow, EigenvalueTable, HalfIntegralContext
from hecke.good_primes import lambda_good, lambda_prime
from hecke.integral import lambda_integral
from ring.cyclotomic import CycNumber

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

OPERATORS = ('bad', 'good', 'prime', 'int-Tq', 'int-Tjq2', 'int-Tp', 'int-Tjp2')


def _cell(ctx: HalfIntegralContext, op: str, prime: int, j: int, mode: str) -> Callable[[MultiplicativePartition], CycNumber]:
    if op == 'bad':
        return lambda sigma: lambda_bad(ctx, sigma, j, prime)
    if op == 'good':
        return lambda sigma: lambda_good(ctx, sigma, j, prime)
    if op == 'prime':
        return lambda sigma: lambda_prime(ctx, sigma, j, prime, mode)
    kind = op[len('int-'):]
    chi_int = ctx.chi.square()
    return lambda sigma: lambda_integral(kind, sigma, prime, ctx.k - 1, chi_int, j)


def _check_prime(ctx: HalfIntegralContext, op: str, prime: int) -> None:
    if op in ('bad', 'int-Tq', 'int-Tjq2'):
        ctx.require_bad_prime(prime)
    else:
        ctx.require_good_prime(prime)


def eigen_table(ctx: HalfIntegralContext, op: str, prime: int, j: int, mode: str = 'closed',
                partition: Optional[int] = None, cache: Optional[Dict] = None) -> EigenvalueTable:
    """
    Rows in partition enumeration order; vanishing series keep their row with no value

    Args:
        partition: index into the enumeration to restrict the table to one row
        cache: optional memo keyed by (context, op, prime, j, mode, partition parts)
    """
    if op not in OPERATORS:
        raise ArgumentError(f"unknown operator {op}; expected one of {', '.join(OPERATORS)}")
    _check_prime(ctx, op, prime)
    if not 0 <= j <= ctx.n:
        raise ArgumentError(f"j={j} outside 0..{ctx.n}")
    if op == 'bad':
        ctx.require_even_character()
    partitions = ctx.partitions()
    if partition is not None:
        if not 0 <= partition < len(partitions):
            raise ArgumentError(f"partition index {partition} outside 0..{len(partitions) - 1}")
        partitions = [partitions[partition]]
    cell = _cell(ctx, op, prime, j, mode)
    table = EigenvalueTable(context=ctx.describe(), op=op, prime=prime, j=j)
    for sigma in partitions:
        status = ctx.status(sigma)
        value = None
        if status.value != 'zero' or op.startswith('int-'):
            key = (ctx.n, ctx.k, ctx.N, ctx.chi.describe(), op, prime, j, mode, sigma.parts)
            if cache is not None and key in cache:
                value = cache[key]
            else:
                value = cell(sigma).to_dict()
                if cache is not None:
                    cache[key] = value
        table.rows.append(EigenvalueRow(sigma=sigma.label(), op=op, prime=prime, j=j,
                                        status=status.label(), value=value))
    logger.info(f"eigen_table op={op} prime={prime} j={j}: {len(table.rows)} rows")
    return table
