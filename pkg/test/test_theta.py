"""
Tests for the theta series numerics and the transformation formula on Gamma_0(4)
"""
import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError
from sympy import Matrix, eye

from errors import ArgumentError
from gauss import (
    ThetaContext,
    s_cd_numeric,
    theta_numeric,
    verify_sl_invariance,
    verify_transformation,
    verify_translation_law
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

TAU_2 = np.array([[1j, 0.3], [0.3, 1j]])


def _theta_one(y: float) -> float:
    return 1 + 2 * sum(math.exp(-2 * math.pi * m * m * y) for m in range(1, 20))


def test_theta_on_imaginary_axis():
    assert theta_numeric(1j) == pytest.approx(_theta_one(1.0), abs=1e-12)
    assert theta_numeric(0.5j) == pytest.approx(_theta_one(0.5), abs=1e-12)


def test_theta_factors_on_diagonal_tau():
    tau = np.diag([1j, 1.5j])
    assert theta_numeric(tau) == pytest.approx(_theta_one(1.0) * _theta_one(1.5), abs=1e-12)


def test_theta_rejects_bad_tau():
    with pytest.raises(ArgumentError):
        theta_numeric(np.array([[1j, 0.5], [0.0, 1j]]))
    with pytest.raises(ArgumentError):
        theta_numeric(-1j)


def test_theta_context_limits():
    with pytest.raises(ValidationError):
        ThetaContext(n=4)
    assert ThetaContext(n=1, max_radius=2).radius(0.01) == 2
    assert ThetaContext(n=1).radius(1.0) >= 3


def test_square_root_starts_on_sqrt_det_d():
    value = s_cd_numeric(Matrix([[4]]), Matrix([[1]]), 1e-6j)
    assert value == pytest.approx(1.0, abs=1e-4)
    value = s_cd_numeric(Matrix([[4]]), Matrix([[-3]]), 1e-6j)
    assert value == pytest.approx(1j * math.sqrt(3), abs=1e-4)


@pytest.mark.parametrize("rows", [
    [[1, 0], [4, 1]],
    [[1, 1], [4, 5]],
    [[-1, 0], [4, -1]],
    [[5, 1], [4, 1]]
])
def test_transformation_degree_one(rows):
    report = verify_transformation(Matrix(rows), 0.1 + 1j)
    assert report.applicable
    assert report.passed, report.error


def test_transformation_degree_two():
    I2 = eye(2)
    gamma = Matrix.vstack(
        Matrix.hstack(I2, Matrix.zeros(2, 2)),
        Matrix.hstack(Matrix([[4, 0], [0, 4]]), I2)
    )
    report = verify_transformation(gamma, TAU_2)
    assert report.passed, report.error


def test_transformation_needs_gamma0_4():
    report = verify_transformation(Matrix([[1, 0], [2, 1]]), 1j)
    assert not report.applicable


def test_translation_law():
    report = verify_translation_law(Matrix([[4]]), Matrix([[1]]), Matrix([[1]]), 1j)
    assert report.passed, report.error
    report = verify_translation_law(4 * eye(2), eye(2), Matrix([[0, 1], [0, 0]]), TAU_2)
    assert not report.applicable
    assert not verify_translation_law(Matrix([[2]]), Matrix([[1]]), Matrix([[1]]), 1j).applicable


def test_sl_invariance():
    E = Matrix([[1, 1], [0, 1]])
    report = verify_sl_invariance(4 * eye(2), eye(2), E, TAU_2)
    assert report.passed, report.error
    assert not verify_sl_invariance(4 * eye(2), eye(2), 2 * eye(2), TAU_2).applicable
