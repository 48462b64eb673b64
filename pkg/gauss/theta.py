"""
Theta Numerics - truncated theta series, the analytic square root S_{C,D}(tau) and numeric checks
of the transformation formula for Gamma_0(4)
"""
import logging
import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import Matrix

from config import (
    BRANCH_REFINE_LIMIT,
    BRANCH_STEPS,
    NUMERIC_TOLERANCE,
    THETA_MAX_RADIUS,
    THETA_TAIL_BOUND
)
from errors import ArgumentError, BranchTrackingError
from gauss.identities import VerificationReport, not_applicable
from gauss.instances import split_blocks
from gauss.sums import theta_multiplier
from matz.integer_matrix import is_coprime_symmetric, to_rows

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

_START_LAMBDA = 1e-9


class ThetaContext(BaseModel):
    """Truncation data for theta(tau) = sum over U in Z^{1,n} of exp(2 pi i U tau tU)"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, le=3)
    tail_bound: float = Field(default=THETA_TAIL_BOUND, gt=0)
    max_radius: int = Field(default=THETA_MAX_RADIUS, ge=1)

    def radius(self, min_eigenvalue: float) -> int:
        """Smallest box radius R with exp(-2 pi lambda R^2) below the tail bound, capped"""
        needed = math.sqrt(math.log(1.0 / self.tail_bound) / (2 * math.pi * min_eigenvalue)) + 1
        R = int(math.ceil(needed))
        if R > self.max_radius:
            logger.warning(f"theta radius {R} capped at {self.max_radius}; tail bound not guaranteed")
            return self.max_radius
        return R


def _as_tau(tau, n: Optional[int] = None) -> np.ndarray:
    tau = np.atleast_2d(np.asarray(tau, dtype=complex))
    if tau.shape[0] != tau.shape[1] or (n is not None and tau.shape[0] != n):
        raise ArgumentError(f"tau must be a square matrix of size {n}")
    if not np.allclose(tau, tau.T):
        raise ArgumentError("tau must be symmetric")
    return tau


def _min_imag_eigenvalue(tau: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(tau.imag).min())


def theta_numeric(tau, ctx: Optional[ThetaContext] = None) -> complex:
    tau = _as_tau(tau)
    n = tau.shape[0]
    ctx = ctx or ThetaContext(n=n)
    lam = _min_imag_eigenvalue(tau)
    if lam <= 0:
        raise ArgumentError("imaginary part of tau is not positive definite")
    R = ctx.radius(lam)
    axis = np.arange(-R, R + 1)
    U = np.stack(np.meshgrid(*([axis] * n), indexing='ij'), axis=-1).reshape(-1, n).astype(float)
    quad = np.einsum('ki,ij,kj->k', U, tau, U)
    return complex(np.exp(2j * np.pi * quad).sum())


def _sqrt_det_start(D: Matrix) -> complex:
    det = int(D.det())
    return complex(math.sqrt(det)) if det > 0 else 1j * math.sqrt(-det)


def s_cd_numeric(C: Matrix, D: Matrix, tau) -> complex:
    """
    Analytic square root of det(C tau + D), continued from sqrt(det D) at i*0+ along the segment
    from i*lambda_0*I to tau
    """
    tau = _as_tau(tau, C.rows)
    if D.det() == 0:
        raise ArgumentError("singular D")
    c = np.array(to_rows(C), dtype=float)
    d = np.array(to_rows(D), dtype=float)
    start = 1j * _START_LAMBDA * np.eye(C.rows)

    def det_at(t: float) -> complex:
        return complex(np.linalg.det(c @ ((1 - t) * start + t * tau) + d))

    value = _sqrt_det_start(D)
    root = np.sqrt(det_at(0.0))
    value = root if abs(root - value) <= abs(root + value) else -root
    t, step, refinements = 0.0, 1.0 / BRANCH_STEPS, 0
    while t < 1.0:
        t_next = min(1.0, t + step)
        root = np.sqrt(det_at(t_next))
        candidate = root if abs(root - value) <= abs(root + value) else -root
        if value == 0 or candidate == 0:
            raise BranchTrackingError(f"det(C tau + D) vanished near t={t_next:.6g}")
        if abs(np.angle(candidate / value)) >= math.pi / 4:
            refinements += 1
            if refinements > BRANCH_REFINE_LIMIT:
                raise BranchTrackingError(f"argument jump not resolved after {BRANCH_REFINE_LIMIT} bisections")
            step /= 2
            continue
        value, t, refinements = candidate, t_next, 0
        step = min(step * 2, 1.0 / BRANCH_STEPS)
    return complex(value)


def _action(gamma: Matrix, tau: np.ndarray) -> np.ndarray:
    A, B, C, D = (np.array(to_rows(X), dtype=float) for X in split_blocks(gamma))
    image = (A @ tau + B) @ np.linalg.inv(C @ tau + D)
    return (image + image.T) / 2


def _relative_error(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / abs(rhs) if rhs else abs(lhs - rhs)


def verify_transformation(gamma: Matrix, tau, ctx: Optional[ThetaContext] = None) -> VerificationReport:
    """theta(gamma tau) / theta(tau) against multiplier(C, D) * S_{C,D}(tau)"""
    A, B, C, D = split_blocks(gamma)
    instance = {'gamma': [list(r) for r in to_rows(gamma)], 'tau': str(np.asarray(tau).tolist())}
    if any(int(e) % 4 for e in C):
        return not_applicable('transformation-formula', instance, "C is not divisible by 4")
    if C.rows > 2:
        return not_applicable('transformation-formula', instance, "degree above 2")
    tau = _as_tau(tau, C.rows)
    ctx = ctx or ThetaContext(n=C.rows)
    lhs = theta_numeric(_action(gamma, tau), ctx) / theta_numeric(tau, ctx)
    rhs = theta_multiplier(C, D).to_complex() * s_cd_numeric(C, D, tau)
    error = _relative_error(lhs, rhs)
    return VerificationReport(
        identity='transformation-formula',
        passed=error < NUMERIC_TOLERANCE,
        instance=instance,
        lhs=[lhs.real, lhs.imag],
        rhs=[rhs.real, rhs.imag],
        error=error
    )


def verify_translation_law(C: Matrix, D: Matrix, Y: Matrix, tau) -> VerificationReport:
    """multiplier(C, D + CY) S_{C,D+CY}(tau) against multiplier(C, D) S_{C,D}(tau + Y)"""
    instance = {'C': to_rows(C), 'D': to_rows(D), 'Y': to_rows(Y)}
    if Y != Y.T:
        return not_applicable('translation-law', instance, "Y is not symmetric")
    if any(int(e) % 4 for e in C):
        return not_applicable('translation-law', instance, "C is not divisible by 4")
    shifted = D + C * Y
    if shifted.det() == 0:
        return not_applicable('translation-law', instance, "D + CY is singular")
    tau = _as_tau(tau, C.rows)
    y = np.array(to_rows(Y), dtype=float)
    lhs = theta_multiplier(C, shifted).to_complex() * s_cd_numeric(C, shifted, tau)
    rhs = theta_multiplier(C, D).to_complex() * s_cd_numeric(C, D, tau + y)
    error = _relative_error(lhs, rhs)
    return VerificationReport(
        identity='translation-law',
        passed=error < NUMERIC_TOLERANCE,
        instance=instance,
        lhs=[lhs.real, lhs.imag],
        rhs=[rhs.real, rhs.imag],
        error=error
    )


def verify_sl_invariance(C: Matrix, D: Matrix, E: Matrix, tau) -> VerificationReport:
    """S_{C,D}(tau) against S_{EC,ED}(tau) for E in SL_n(Z)"""
    instance = {'C': to_rows(C), 'D': to_rows(D), 'E': to_rows(E)}
    if E.det() != 1:
        return not_applicable('sl-invariance', instance, "det E is not 1")
    if not is_coprime_symmetric(C, D):
        return not_applicable('sl-invariance', instance, "(C D) is not a coprime symmetric pair")
    lhs = s_cd_numeric(C, D, tau)
    rhs = s_cd_numeric(E * C, E * D, tau)
    error = _relative_error(lhs, rhs)
    return VerificationReport(
        identity='sl-invariance',
        passed=error < NUMERIC_TOLERANCE,
        instance=instance,
        lhs=[lhs.real, lhs.imag],
        rhs=[rhs.real, rhs.imag],
        error=error
    )
