"""
Tests for generalized Gauss sums and their exact identities
"""
import logging

import pytest
from sympy import Matrix, Rational, diag, eye, zeros

from errors import ArgumentError, BudgetExceededError, SingularMatrixError
from gauss import (
    gauss_sum,
    make_rng,
    random_coprime_pair,
    random_symplectic,
    random_unimodular,
    sample_column_instance,
    sample_mixed_instance,
    sample_scaling_instance,
    split_blocks,
    theta_multiplier,
    verify_column_scaling,
    verify_conjugation_scaling,
    verify_mixed_conjugation,
    verify_odd_cusp_sign,
    verify_unimodular_invariance,
    x0_diag,
    x_diag
)
from ring import cyc_root_of_unity, gauss_g1, legendre

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_degree_one_sum_is_classical(q):
    assert gauss_sum(Matrix([[1]]), Matrix([[q]])) == gauss_g1(q)
    assert gauss_sum(Matrix([[2]]), Matrix([[q]])) == gauss_g1(q) * legendre(2, q)


def test_trivial_denominator():
    assert gauss_sum(Matrix([[3, 1], [1, 0]]), eye(2)) == 1


def test_gauss_sum_preconditions():
    with pytest.raises(SingularMatrixError):
        gauss_sum(Matrix([[1]]), Matrix([[0]]))
    with pytest.raises(ArgumentError):
        gauss_sum(Matrix([[3]]), Matrix([[3]]))
    with pytest.raises(BudgetExceededError):
        gauss_sum(Matrix([[1]]), Matrix([[7]]), budget=5)


def test_theta_multiplier_degree_one():
    """conj(G_4(d)) / sqrt(d) is the classical eps_d^-1 (c/d)"""
    assert theta_multiplier(Matrix([[4]]), Matrix([[1]])) == 1
    assert theta_multiplier(Matrix([[4]]), Matrix([[5]])) == 1
    assert theta_multiplier(Matrix([[4]]), Matrix([[3]])) == cyc_root_of_unity(4, 3)
    with pytest.raises(ArgumentError):
        theta_multiplier(Matrix([[2]]), Matrix([[3]]))


def test_x_matrices():
    assert x_diag(3, 5, 2) == diag(5, 5, 1)
    assert x0_diag(2, 3, 1) == diag(1, Rational(1, 3))


def test_random_elements_are_symplectic():
    rng = make_rng(3)
    J = Matrix([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]])
    for level in (1, 4):
        gamma = random_symplectic(2, rng, level=level)
        assert gamma.T * J * gamma == J
        _, _, C, _ = split_blocks(gamma)
        assert all(int(e) % level == 0 for e in C)
    assert random_unimodular(3, rng).det() == 1


def test_unimodular_invariance():
    rng = make_rng(5)
    for n in (1, 2):
        C, D = random_coprime_pair(n, rng, max_det=300)
        report = verify_unimodular_invariance(C, D, random_unimodular(n, rng))
        assert report.applicable and report.passed, report.notes


def test_unimodular_invariance_not_applicable():
    report = verify_unimodular_invariance(Matrix([[1]]), Matrix([[3]]), Matrix([[2]]))
    assert not report.applicable
    assert not report.passed
    assert report.reason


def test_scaling_anchor():
    """G_1(9) = 3 G_1(1) = 3"""
    report = verify_conjugation_scaling(Matrix([[1]]), Matrix([[1]]), 3, 1)
    assert report.passed
    assert report.lhs['coeffs'][0] == "3/1"


def test_scaling_outside_range():
    report = verify_conjugation_scaling(Matrix([[1]]), Matrix([[1]]), 3, 2)
    assert not report.applicable


# (M, N, q, s) with both (M N) and (X_s M X_s^-1, X_s N X_s) coprime symmetric
SCALING_PINNED = [
    ([[2]], [[5]], 3, 1),
    ([[1, 0], [0, 1]], [[2, 1], [1, 3]], 3, 1),
    ([[1, 0], [0, 2]], [[3, 0], [0, 7]], 5, 1),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 2]], [[3, 0, 0], [0, 7, 0], [0, 0, 1]], 5, 2),
]

# (M, N, q, r) with M = [[qA1, A2], [q^2 A3, qA4]] and N = [[B1, B2], [B3, qB4]]
MIXED_PINNED = [
    ([[9]], [[5]], 3, 1),
    ([[0, 2], [25, 0]], [[0, 3], [7, 0]], 5, 1),
    ([[0, 2, 0], [0, 0, 1], [9, 0, 0]], [[0, 1, 0], [0, 0, 5], [7, 0, 0]], 3, 1),
    ([[0, 0, 1], [9, 0, 0], [0, 9, 0]], [[0, 0, 7], [1, 0, 0], [0, 5, 0]], 3, 2),
]

# (M, N, q, l) with M = [[qB1, B2], [qB3, qB4]] and N = [[C1, C2], [C3, qC4]], B_3 and C_3 units mod q
COLUMN_PINNED = [
    ([[6]], [[5]], 3, 1),
    ([[0, 1], [3, 0]], [[0, 1], [1, 0]], 3, 1),
    ([[0, 2], [5, 0]], [[0, 3], [7, 0]], 5, 1),
    ([[3, 0], [0, 3]], [[2, 1], [1, 1]], 3, 2),
    ([[0, 1, 0], [0, 0, 2], [3, 0, 0]], [[0, 5, 0], [0, 0, 1], [7, 0, 0]], 3, 1),
]


@pytest.mark.parametrize("M, N, q, s", SCALING_PINNED)
def test_conjugation_scaling_pinned(M, N, q, s):
    report = verify_conjugation_scaling(Matrix(M), Matrix(N), q, s)
    assert report.applicable, report.reason
    assert report.passed


@pytest.mark.parametrize("M, N, q, r", MIXED_PINNED)
def test_mixed_conjugation_pinned(M, N, q, r):
    report = verify_mixed_conjugation(Matrix(M), Matrix(N), q, r)
    assert report.applicable, report.reason
    assert report.passed


@pytest.mark.parametrize("M, N, q, l", COLUMN_PINNED)
def test_column_scaling_pinned(M, N, q, l):
    report = verify_column_scaling(Matrix(M), Matrix(N), q, l)
    assert report.applicable, report.reason
    assert report.passed, report.notes


def test_column_scaled_sums():
    # D^-1 C = diag(1/3, 1), so only the first coordinate contributes
    assert gauss_sum(Matrix([[0, 1], [1, 0]]), Matrix([[0, 1], [3, 0]])) == gauss_g1(3)
    # the form (u1 - u2)^2 + u2^2 over (Z/3)^2
    assert gauss_sum(eye(2), 3 * Matrix([[2, 1], [1, 1]])) == -3


def test_column_scaling_nonresidue_sign():
    """det B_3 C_3 = 7 is a non-residue mod 5"""
    report = verify_column_scaling(Matrix([[0, 2], [5, 0]]), Matrix([[0, 3], [7, 0]]), 5, 1)
    assert report.passed
    assert "sign -1" in report.notes[1]


@pytest.mark.parametrize("identity", ['scaling', 'mixed', 'column'])
def test_scaling_identities_seeded_batch(identity):
    samplers = {
        'scaling': (sample_scaling_instance, verify_conjugation_scaling),
        'mixed': (sample_mixed_instance, verify_mixed_conjugation),
        'column': (sample_column_instance, verify_column_scaling)
    }
    sampler, check = samplers[identity]
    rng = make_rng(2024)
    checked = 0
    for n, q in ((1, 3), (1, 5), (2, 3), (2, 5)):
        found = sampler(n, q, 1, rng)
        if found is None:
            continue
        report = check(*found, q, 1)
        assert report.applicable, report.reason
        assert report.passed, report.notes
        checked += 1
    assert checked >= 2


def test_column_scaling_rejects_bad_pattern():
    report = verify_column_scaling(Matrix([[1]]), Matrix([[3]]), 3, 1)
    assert not report.applicable


@pytest.mark.parametrize("N", [1, 3, 5, 15])
def test_odd_cusp_sign(N):
    report = verify_odd_cusp_sign(N, 2)
    assert report.applicable and report.passed


def test_odd_cusp_sign_preconditions():
    assert not verify_odd_cusp_sign(4, 2).applicable
    assert not verify_odd_cusp_sign(3, 1).applicable


def test_zero_lower_block():
    C, D = zeros(2, 2), eye(2)
    assert gauss_sum(C, D) == 1
