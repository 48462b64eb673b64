"""
Bad Primes - action of T_j(q^2) for q | N on the Gamma_0(4)-generated series E_sigma,
the eigenvalues of the recombined basis and the multiplicity-one separation
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from counts.subspaces import beta
from counts.symmetric import char_kind, sym_closed
from cusps.partitions import MultiplicativePartition, enumerate_partitions
from errors import ArgumentError, DegenerateSpectrumError
from hecke.context import HalfIntegralContext
from hecke.pairs import char_pair_eval, m_sigma_entries, x_diag_entries, x_sr_inverse_entries
from ring.characters import odd_squarefree_primes
from ring.cyclotomic import CycNumber, gauss_g1, prime_power

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Parts = Tuple[int, ...]
Triangle = Tuple[Tuple[CycNumber, ...], ...]


@lru_cache(maxsize=64)
def _normalized_gauss(q: int) -> CycNumber:
    """G_1(q) / sqrt(q)"""
    return gauss_g1(q) * prime_power(q, Fraction(-1, 2))


def _check_base(ctx: HalfIntegralContext, base: MultiplicativePartition, q: int) -> None:
    ctx.require_bad_prime(q)
    if base.n != ctx.n or base.N * q != ctx.N:
        raise ArgumentError(f"base partition {base.label()} is not a partition of N/q = {ctx.N // q}")


def A_coeff(ctx: HalfIntegralContext, base: MultiplicativePartition, q: int, d: int, j: int, t: int) -> CycNumber:
    """
    Coefficient of E_(sigma_(d+t)) in E_(sigma_d) | T_j(q^2), where sigma_d puts q in slot d of base

    Args:
        base: partition of N/q fixing every other prime
        d: slot of q in the source series
        j: operator index, 0 meaning the identity
        t: slot increase of q in the target series
    """
    _check_base(ctx, base, q)
    ctx.require_even_character()
    n, k, chi = ctx.n, ctx.k, ctx.chi
    if not 0 <= d <= n or not 0 <= j <= n:
        raise ArgumentError(f"need 0 <= d, j <= n={n}, got d={d} j={j}")
    if t < 0 or t > n - d:
        return CycNumber.zero()
    if j == 0:
        return CycNumber.one() if t == 0 else CycNumber.zero()

    kind = char_kind(chi, q)
    twisted = kind.twisted()
    moduli = odd_squarefree_primes(base.N)
    m_diag = m_sigma_entries(base.with_prime(q, d))
    xj = x_diag_entries(n, q, j)
    half_k = Fraction(k, 2)

    total = CycNumber.zero()
    for s in range(j + 1):
        for d5 in range(j - s + 1):
            for d8 in range(d5 + 1):
                weight = (beta(q, d, s) * beta(q, t, d5) * beta(q, n - d - t, j - s + d8 - t)
                          * beta(q, t - d5, d8))
                if weight == 0:
                    continue
                plain = sym_closed(q, kind, t - d5 - d8, 0)
                if plain.is_zero():
                    continue
                bordered = sym_closed(q, twisted, d5, d8)
                if bordered.is_zero():
                    continue
                r = j - s - d5 + d8
                a = ((half_k - d) * (2 * s + d5 - d8) + s * (s - d8 - j - 1) + d8 * (j - d5)
                     - Fraction(d5 * (d5 + 1), 2) + Fraction(d8 * (d8 + 1), 2))
                xinv = x_sr_inverse_entries(n, q, s, r)
                pair_m = [xi * mi * xx for xi, mi, xx in zip(xinv, m_diag, xj)]
                pair_n = [xi / xx for xi, xx in zip(xinv, xj)]
                pair = char_pair_eval(chi, moduli, pair_m, pair_n).conj()
                term = prime_power(q, a) * pair * plain * bordered * _normalized_gauss(q) ** (k * (d5 - d8))
                total = total + term.scale(weight)
    prefactor = prime_power(q, Fraction((j - t) * d) - Fraction(t * (t + 1), 2))
    return (total * prefactor).scale(beta(q, d + t, t))


def lambda_bad(ctx: HalfIntegralContext, sigma: MultiplicativePartition, j: int, q: int) -> CycNumber:
    """T_j(q^2)-eigenvalue of the recombined series for sigma"""
    ctx.require_bad_prime(q)
    if sigma.N != ctx.N or sigma.n != ctx.n:
        raise ArgumentError(f"partition {sigma.label()} does not match the context")
    n, k, chi = ctx.n, ctx.k, ctx.chi
    if not 0 <= j <= n:
        raise ArgumentError(f"j={j} outside 0..{n}")
    if j == 0:
        return CycNumber.one()
    d = sigma.slot_of(q)
    first = odd_squarefree_primes(sigma.parts[0] // gcd(sigma.parts[0], q))
    last = odd_squarefree_primes(sigma.parts[-1] // gcd(sigma.parts[-1], q))
    total = CycNumber.zero()
    for s in range(j + 1):
        weight = beta(q, d, s) * beta(q, n - d, j - s)
        if weight == 0:
            continue
        term = (prime_power(q, j * d + s * (k - 2 * d + s - j - 1))
                * chi.power_value(q, 2 * s, first)
                * chi.power_value(q, 2 * (j - s), last))
        total = total + term.scale(weight)
    return total


@lru_cache(maxsize=512)
def bad_prime_matrix(ctx: HalfIntegralContext, base: MultiplicativePartition, q: int, j: int) -> Triangle:
    """
    Upper-triangular (n+1)x(n+1) matrix with entry [d][d+t] = A_j(d,t)
    Rows and columns of vanishing series are zero
    """
    n = ctx.n
    zero = [ctx.is_zero(base.with_prime(q, d)) for d in range(n + 1)]
    rows = []
    for d in range(n + 1):
        row = []
        for f in range(n + 1):
            if f < d or zero[d] or zero[f]:
                row.append(CycNumber.zero())
            else:
                row.append(A_coeff(ctx, base, q, d, j, f - d))
        rows.append(tuple(row))
    logger.debug(f"bad_prime_matrix q={q} base={base.label()} j={j}")
    return tuple(rows)


def _eigenvector(matrix: Triangle, d: int) -> List[CycNumber]:
    """
    Coefficients a_f (f >= d, a_d = 1) with sum_e a_e A[e][f] = A[d][d] a_f
    by back-substitution; columns below d are zero
    """
    size = len(matrix)
    eigenvalue = matrix[d][d]
    coeffs = [CycNumber.zero() for _ in range(size)]
    coeffs[d] = CycNumber.one()
    for f in range(d + 1, size):
        rhs = CycNumber.zero()
        for e in range(d, f):
            rhs = rhs + coeffs[e] * matrix[e][f]
        gap = eigenvalue - matrix[f][f]
        if gap.is_zero():
            if not rhs.is_zero():
                raise DegenerateSpectrumError(f"repeated eigenvalue at slots {d} and {f}")
            continue
        coeffs[f] = rhs / gap
    return coeffs


def _triangular_residual_free(matrix: Triangle, d: int, coeffs: List[CycNumber]) -> bool:
    eigenvalue = matrix[d][d]
    for f in range(d, len(matrix)):
        image = CycNumber.zero()
        for e in range(d, f + 1):
            image = image + coeffs[e] * matrix[e][f]
        if image != eigenvalue * coeffs[f]:
            return False
    return True


class TildeBasis(BaseModel):
    """sigma -> {alpha >= sigma: a_(sigma,alpha)(N)}, with a_(sigma,sigma) = 1"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    context: Dict
    coefficients: Dict[Parts, Dict[Parts, CycNumber]] = Field(default_factory=dict)
    vanishing: List[Parts] = Field(default_factory=list)
    triangular_residual_free: bool = True

    def coefficient(self, sigma: Parts, alpha: Parts) -> CycNumber:
        return self.coefficients.get(sigma, {}).get(alpha, CycNumber.zero())

    def to_dict(self) -> Dict:
        return {
            'context': self.context,
            'vanishing': [list(p) for p in self.vanishing],
            'triangular_residual_free': self.triangular_residual_free,
            'coefficients': [
                {'sigma': list(sigma), 'alpha': list(alpha), 'value': value.to_dict()}
                for sigma, row in self.coefficients.items() for alpha, value in row.items()
            ]
        }


def tilde_basis(ctx: HalfIntegralContext) -> TildeBasis:
    """
    Recombined basis diagonalizing every T_n(q^2), q | N: per prime an upper-triangular
    eigenvector solve over the slots of q, then a_(sigma,alpha)(N) = prod_q a_(sigma,alpha)(q)
    """
    ctx.require_even_character()
    n = ctx.n
    local: Dict[Tuple[int, Parts], List[List[CycNumber]]] = {}
    residual_free = True
    for q in ctx.primes:
        for base in enumerate_partitions(ctx.N // q, n):
            matrix = bad_prime_matrix(ctx, base, q, n)
            vectors = [_eigenvector(matrix, d) for d in range(n + 1)]
            residual_free &= all(_triangular_residual_free(matrix, d, vectors[d]) for d in range(n + 1))
            local[(q, base.parts)] = vectors

    basis = TildeBasis(context=ctx.describe(), triangular_residual_free=residual_free)
    partitions = ctx.partitions()
    for sigma in partitions:
        if ctx.is_zero(sigma):
            basis.vanishing.append(sigma.parts)
            continue
        row: Dict[Parts, CycNumber] = {}
        for alpha in partitions:
            if not alpha.dominates(sigma):
                continue
            value = CycNumber.one()
            for q in ctx.primes:
                vectors = local[(q, sigma.without_prime(q).parts)]
                value = value * vectors[sigma.slot_of(q)][alpha.slot_of(q)]
                if value.is_zero():
                    break
            if alpha == sigma or not value.is_zero():
                row[alpha.parts] = value
        basis.coefficients[sigma.parts] = row
    logger.info(f"tilde_basis N={ctx.N} n={n}: {len(basis.coefficients)} series, {len(basis.vanishing)} vanishing")
    return basis


def apply_bad_operator(ctx: HalfIntegralContext, q: int, j: int,
                       vector: Dict[Parts, CycNumber]) -> Dict[Parts, CycNumber]:
    """Image of sum_alpha c_alpha E_alpha under T_j(q^2), in the E basis"""
    image: Dict[Parts, CycNumber] = {}
    for parts, c in vector.items():
        alpha = MultiplicativePartition(parts=parts)
        base = alpha.without_prime(q)
        f = alpha.slot_of(q)
        matrix = bad_prime_matrix(ctx, base, q, j)
        for g in range(f, ctx.n + 1):
            target = base.with_prime(q, g).parts
            image[target] = image.get(target, CycNumber.zero()) + c * matrix[f][g]
    return image


def eigen_residual_free(ctx: HalfIntegralContext, basis: TildeBasis, q: int, j: Optional[int] = None) -> Dict[Parts, bool]:
    """Per sigma: the recombined series is an exact T_j(q^2)-eigenvector with eigenvalue lambda_bad"""
    j = ctx.n if j is None else j
    verdicts = {}
    for sigma_parts, row in basis.coefficients.items():
        eigenvalue = lambda_bad(ctx, MultiplicativePartition(parts=sigma_parts), j, q)
        image = apply_bad_operator(ctx, q, j, row)
        keys = set(image) | set(row)
        verdicts[sigma_parts] = all(
            image.get(key, CycNumber.zero()) == eigenvalue * row.get(key, CycNumber.zero()) for key in keys
        )
    return verdicts


class MultiplicityReport(BaseModel):
    passed: bool
    context: Dict
    vectors: Dict[str, Dict[int, Dict]] = Field(default_factory=dict)
    witnesses: Dict[str, int] = Field(default_factory=dict)
    collisions: List[List[str]] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


def multiplicity_one_check(ctx: HalfIntegralContext) -> MultiplicityReport:
    """Every pair of distinct nonvanishing series is separated by some T_n(q^2), q | N"""
    live = [sigma for sigma in ctx.partitions() if not ctx.is_zero(sigma)]
    vectors = {sigma.parts: {q: lambda_bad(ctx, sigma, ctx.n, q) for q in ctx.primes} for sigma in live}
    witnesses, collisions = {}, []
    for i, sigma in enumerate(live):
        for rho in live[i + 1:]:
            witness = next((q for q in ctx.primes if vectors[sigma.parts][q] != vectors[rho.parts][q]), None)
            key = f"{sigma.label()}|{rho.label()}"
            if witness is None:
                collisions.append([sigma.label(), rho.label()])
                logger.error(f"multiplicity one fails for {key}")
            else:
                witnesses[key] = witness
    notes = []
    if any(d + e == ctx.k - 1 for d in range(ctx.n + 1) for e in range(d + 1, ctx.n + 1)):
        notes.append("slots d, d' with d + d' = k - 1 share the eigenvalue magnitude q^(d(k-d-1))")
    return MultiplicityReport(
        passed=not collisions,
        context=ctx.describe(),
        vectors={sigma.label(): {q: v.to_dict() for q, v in row.items()}
                 for sigma, row in ((MultiplicativePartition(parts=p), r) for p, r in vectors.items())},
        witnesses=witnesses,
        collisions=collisions,
        notes=notes
    )
