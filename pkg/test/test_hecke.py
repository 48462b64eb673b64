"""
Tests for the Hecke eigenvalue formulas at bad and good primes, the recombined basis
and the integral-weight comparison
"""
import logging
from fractions import Fraction

import pytest

from cusps import MultiplicativePartition, enumerate_partitions
from errors import ArgumentError
from hecke import (
    A_coeff,
    HalfIntegralContext,
    bad_prime_matrix,
    char_pair_eval,
    eigen_residual_free,
    eigen_table,
    lambda_bad,
    lambda_good,
    lambda_integral,
    lambda_prime,
    multiplicity_one_check,
    shimura_compare,
    tilde_basis,
    x_diag_entries,
    x_sr_inverse_entries
)
from ring import DirichletCharacter, parse_character

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

EVEN_CHARACTERS_15 = ['trivial@3', 'quadratic@5', 'quadratic@3,quadratic@4']


def _context(n: int, k: int, N: int, character: str = None) -> HalfIntegralContext:
    return HalfIntegralContext.build(n, k, N, parse_character(character, N))


def _partition(*parts) -> MultiplicativePartition:
    return MultiplicativePartition(parts=parts)


# Context

def test_context_validation():
    with pytest.raises(ValueError):
        HalfIntegralContext.build(1, 8, 3)
    with pytest.raises(ValueError):
        HalfIntegralContext.build(1, 7, 3, DirichletCharacter.trivial(15))
    with pytest.raises(ValueError):
        HalfIntegralContext.build(1, 7, 9)


def test_formal_range():
    assert _context(1, 7, 3).formal
    assert _context(1, 7, 3).describe()['notes']
    assert not _context(5, 7, 3).formal
    assert _context(5, 7, 3).describe()['notes'] == []


def test_prime_requirements():
    ctx = _context(1, 7, 15)
    ctx.require_bad_prime(5)
    ctx.require_good_prime(7)
    with pytest.raises(ArgumentError):
        ctx.require_bad_prime(7)
    with pytest.raises(ArgumentError):
        ctx.require_good_prime(3)
    with pytest.raises(ArgumentError):
        ctx.require_good_prime(9)
    with pytest.raises(ArgumentError):
        _context(1, 7, 15, 'quadratic@3').require_even_character()


# Character pairs

def test_pair_diagonals():
    assert x_diag_entries(3, 5, 2) == [5, 5, 1]
    assert x_sr_inverse_entries(3, 3, 1, 1) == [Fraction(1, 3), 1, 3]
    with pytest.raises(ArgumentError):
        x_sr_inverse_entries(2, 3, 2, 1)


def test_char_pair_eval():
    chi = parse_character('quadratic@5,quadratic@4', 15)
    # chi_5(1/2) = chi_5(3) = -1
    assert char_pair_eval(chi, [5], [2, 1], [1, 1]) == -1
    # 5 | M entry: the opposite N entry enters instead
    assert char_pair_eval(chi, [5], [2, 5], [1, 3]) == 1
    assert char_pair_eval(chi, [4], [1, 1], [3, 1]) == -1
    assert char_pair_eval(DirichletCharacter.trivial(15), [3, 5], [2, 7], [1, 1]) == 1
    with pytest.raises(ArgumentError):
        char_pair_eval(chi, [5], [5], [5])
    with pytest.raises(ArgumentError):
        char_pair_eval(chi, [5], [1, 1], [1])


# Bad primes

@pytest.mark.parametrize("k", [7, 9])
def test_bad_eigenvalue_trivial_character(k):
    """T_n(q^2) on the series with q in slot d is q^(d(k-d-1))"""
    ctx = _context(2, k, 15)
    for sigma in ctx.partitions():
        for q in (3, 5):
            d = sigma.slot_of(q)
            assert lambda_bad(ctx, sigma, 2, q) == q ** (d * (k - d - 1))


@pytest.mark.parametrize("character", EVEN_CHARACTERS_15 + ['gen^1:4@5,quadratic@4'])
def test_bad_eigenvalue_magnitude(character):
    ctx = _context(2, 9, 15, character)
    for sigma in ctx.partitions():
        for q in (3, 5):
            d = sigma.slot_of(q)
            assert lambda_bad(ctx, sigma, 2, q).abs2() == q ** (2 * d * (9 - d - 1))


def test_bad_eigenvalue_index_zero_and_errors():
    ctx = _context(1, 7, 15)
    sigma = ctx.partitions()[0]
    assert lambda_bad(ctx, sigma, 0, 3) == 1
    with pytest.raises(ArgumentError):
        lambda_bad(ctx, sigma, 2, 3)
    with pytest.raises(ArgumentError):
        lambda_bad(ctx, sigma, 1, 7)
    with pytest.raises(ArgumentError):
        lambda_bad(ctx, _partition(3, 1), 1, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("character", EVEN_CHARACTERS_15)
@pytest.mark.parametrize("k", [7, 9])
def test_diagonal_coefficient_is_eigenvalue(n, character, k):
    """A_j(d, 0) equals lambda_bad for every slot d, with j = 0 giving 1 on both sides"""
    ctx = _context(n, k, 15, character)
    for q in (3, 5):
        for base in enumerate_partitions(ctx.N // q, n):
            for d in range(n + 1):
                sigma = base.with_prime(q, d)
                for j in range(n + 1):
                    assert A_coeff(ctx, base, q, d, j, 0) == lambda_bad(ctx, sigma, j, q), \
                        (base.label(), q, d, j)


def test_coefficient_edges():
    ctx = _context(2, 9, 15)
    base = _partition(1, 5, 1)
    assert A_coeff(ctx, base, 3, 1, 2, 2).is_zero()
    assert A_coeff(ctx, base, 3, 1, 2, -1).is_zero()
    assert A_coeff(ctx, base, 3, 1, 0, 0) == 1
    assert A_coeff(ctx, base, 3, 1, 0, 1).is_zero()
    with pytest.raises(ArgumentError):
        A_coeff(ctx, _partition(1, 15, 1), 3, 0, 1, 0)
    with pytest.raises(ArgumentError):
        A_coeff(_context(2, 9, 15, 'quadratic@3'), base, 3, 0, 1, 0)


def test_bad_prime_matrix_is_triangular():
    ctx = _context(2, 9, 15)
    base = _partition(1, 5, 1)
    matrix = bad_prime_matrix(ctx, base, 3, 2)
    assert len(matrix) == 3 and all(len(row) == 3 for row in matrix)
    for d in range(3):
        assert matrix[d][d] == lambda_bad(ctx, base.with_prime(3, d), 2, 3)
        for f in range(d):
            assert matrix[d][f].is_zero()
    assert matrix[0][1] == A_coeff(ctx, base, 3, 0, 2, 1)


def test_recombined_basis():
    ctx = _context(2, 9, 15)
    basis = tilde_basis(ctx)
    assert basis.triangular_residual_free
    assert basis.vanishing == []
    assert len(basis.coefficients) == 9
    for sigma in ctx.partitions():
        assert basis.coefficient(sigma.parts, sigma.parts) == 1
        for alpha in ctx.partitions():
            if not alpha.dominates(sigma):
                assert basis.coefficient(sigma.parts, alpha.parts).is_zero()
    for q in (3, 5):
        assert all(eigen_residual_free(ctx, basis, q).values())
    payload = basis.to_dict()
    assert payload['context']['N'] == 15
    assert payload['coefficients']


def test_recombined_basis_small_level():
    ctx = _context(1, 7, 3)
    basis = tilde_basis(ctx)
    assert set(basis.coefficients) == {(3, 1), (1, 3)}
    assert all(eigen_residual_free(ctx, basis, 3).values())
    assert all(eigen_residual_free(ctx, basis, 3, j=0).values())


def test_recombined_basis_marks_vanishing():
    ctx = _context(2, 9, 15, 'gen^1:4@5,quadratic@4')
    basis = tilde_basis(ctx)
    assert {parts for parts in basis.vanishing} == {
        sigma.parts for sigma in ctx.partitions() if sigma.slot_of(5) == 1
    }


def test_multiplicity_one():
    report = multiplicity_one_check(_context(2, 9, 15))
    assert report.passed
    assert report.collisions == []
    assert len(report.witnesses) == 36
    assert report.notes == []
    assert multiplicity_one_check(_context(1, 7, 3)).passed


def test_multiplicity_one_collision():
    """k = 3, n = 2: slots 0 and 2 share the eigenvalue 1"""
    report = multiplicity_one_check(_context(2, 3, 3))
    assert not report.passed
    assert report.collisions == [["(3,1,1)", "(1,1,3)"]]
    assert report.notes


# Good primes

@pytest.mark.parametrize("p, k", [(5, 5), (7, 9), (3, 7)])
def test_good_eigenvalue_degree_one(p, k):
    ctx = _context(1, k, 1)
    sigma = ctx.partitions()[0]
    assert lambda_good(ctx, sigma, 1, p) == 1 + p ** (k - 2)
    assert lambda_good(ctx, sigma, 0, p) == 1


def test_good_eigenvalue_anchor():
    ctx = _context(1, 5, 1)
    assert lambda_good(ctx, ctx.partitions()[0], 1, 5) == 126


def test_transformed_eigenvalue_anchor():
    ctx = _context(2, 9, 1)
    sigma = ctx.partitions()[0]
    assert lambda_prime(ctx, sigma, 1, 3, 'closed') == 2880
    assert lambda_prime(ctx, sigma, 1, 3, 'via-transform') == 2880


@pytest.mark.parametrize("N, p, character", [(1, 3, None), (1, 5, None), (1, 7, None),
                                             (15, 7, None), (15, 7, 'quadratic@5'), (5, 3, 'gen^1:4@5')])
@pytest.mark.parametrize("k", [5, 7])
def test_transformed_modes_agree_degree_one(N, p, character, k):
    ctx = _context(1, k, N, character)
    for sigma in ctx.partitions():
        for j in (0, 1):
            closed = lambda_prime(ctx, sigma, j, p, 'closed')
            assert closed == lambda_prime(ctx, sigma, j, p, 'via-transform')


@pytest.mark.parametrize("N, p", [(1, 3), (1, 5), (1, 7), (3, 5), (15, 7)])
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [7, 9])
def test_transformed_modes_agree(N, p, n, k):
    """Closed product and transform of the good-prime values agree for 1 <= j <= n"""
    ctx = _context(n, k, N)
    for sigma in ctx.partitions():
        for j in range(1, n + 1):
            closed = lambda_prime(ctx, sigma, j, p, 'closed')
            assert closed == lambda_prime(ctx, sigma, j, p, 'via-transform'), (sigma.label(), j)


def test_transformed_unknown_mode():
    ctx = _context(1, 7, 1)
    with pytest.raises(ArgumentError):
        lambda_prime(ctx, ctx.partitions()[0], 1, 3, 'numeric')


# Integral weight

def test_integral_eigenvalues():
    chi = DirichletCharacter.trivial(3)
    sigma = _partition(3, 1)
    assert lambda_integral('Tp', sigma, 5, 6, chi) == 1 + 5 ** 5
    assert lambda_integral('Tjq2', sigma, 3, 6, chi, j=0) == 1
    assert lambda_integral('Tjp2', sigma, 5, 6, chi, j=0) == 1


def test_integral_validation():
    chi = DirichletCharacter.trivial(3)
    sigma = _partition(3, 1)
    with pytest.raises(ArgumentError):
        lambda_integral('Tq', sigma, 5, 6, chi)
    with pytest.raises(ArgumentError):
        lambda_integral('Tp', sigma, 3, 6, chi)
    with pytest.raises(ArgumentError):
        lambda_integral('Tjq2', sigma, 3, 6, chi)
    with pytest.raises(ArgumentError):
        lambda_integral('Tp', sigma, 5, 0, chi)
    with pytest.raises(ArgumentError):
        lambda_integral('Tp', sigma, 5, 6, DirichletCharacter.trivial(15))


@pytest.mark.parametrize("N, k, p, character", [
    (3, 7, 5, None),
    (15, 7, 7, None),
    (15, 9, 7, 'quadratic@5'),
    (5, 7, 3, 'gen^1:4@5'),
    (5, 5, 7, 'gen^1:4@5,quadratic@4')
])
def test_degree_one_comparison(N, k, p, character):
    report = shimura_compare(N, k, parse_character(character, N), p)
    assert report.passed
    assert len(report.rows) == 2 ** len(parse_character(None, N).primes)


def test_degree_one_comparison_anchor():
    report = shimura_compare(3, 7, None, 5)
    row = next(r for r in report.rows if r.sigma == "(3,1)")
    assert row.equal
    assert row.integral['coeffs'][0] == "3126/1"


# Tables

def test_eigen_table_rows():
    ctx = _context(2, 9, 15)
    table = eigen_table(ctx, 'bad', 3, 2)
    assert len(table.rows) == 9
    assert all(row.value is not None for row in table.rows)
    assert table.rows[0].sigma == "(15,1,1)"
    assert table.rows[0].value['coeffs'][0] == "1/1"


def test_eigen_table_vanishing_rows():
    ctx = _context(2, 9, 15, 'gen^1:4@5,quadratic@4')
    table = eigen_table(ctx, 'good', 7, 1)
    empty = [row for row in table.rows if row.value is None]
    assert len(empty) == 3
    assert all(row.status == "zero(character-square)" for row in empty)
    integral = eigen_table(ctx, 'int-Tp', 7, 1)
    assert all(row.value is not None for row in integral.rows)


def test_eigen_table_single_partition_and_cache():
    ctx = _context(1, 7, 15)
    cache = {}
    first = eigen_table(ctx, 'prime', 7, 1, partition=2, cache=cache)
    assert len(first.rows) == 1
    assert len(cache) == 1
    second = eigen_table(ctx, 'prime', 7, 1, partition=2, cache=cache)
    assert second.rows[0].value == first.rows[0].value
    assert len(cache) == 1


@pytest.mark.parametrize("op, prime, j, character", [
    ('bad', 7, 1, None),
    ('good', 3, 1, None),
    ('int-Tq', 7, 1, None),
    ('bad', 3, 3, None),
    ('bad', 3, 1, 'quadratic@3'),
    ('rotate', 3, 1, None)
])
def test_eigen_table_errors(op, prime, j, character):
    with pytest.raises(ArgumentError):
        eigen_table(_context(2, 9, 15, character), op, prime, j)


def test_eigen_table_partition_index():
    with pytest.raises(ArgumentError):
        eigen_table(_context(1, 7, 15), 'good', 7, 1, partition=4)
