"""
Verifier Agent - runs the identity suites over fixed anchors and seeded random instances
Instances are drawn up front in a fixed order, checked in a thread pool, and reported in that same order
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field
from sympy import Matrix
from tqdm import tqdm

from config import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    MAX_WORKERS,
    SHOW_PROGRESS,
    UNIMODULAR_E_PER_PAIR,
    UNIMODULAR_PAIRS
)
from counts import CharKind, beta, count_subspaces, sym_bruteforce, sym_closed
from cusps import (
    admissible_count,
    build_M_sigma,
    classify_cusp,
    enumerate_admissible
)
from gauss import (
    VerificationReport,
    make_rng,
    not_applicable,
    random_coprime_pair,
    random_gamma0_4,
    random_symmetric,
    random_unimodular,
    sample_column_instance,
    sample_mixed_instance,
    sample_scaling_instance,
    split_blocks,
    verify_column_scaling,
    verify_conjugation_scaling,
    verify_mixed_conjugation,
    verify_odd_cusp_sign,
    verify_sl_invariance,
    verify_transformation,
    verify_translation_law,
    verify_unimodular_invariance
)
from hecke import (
    A_coeff,
    HalfIntegralContext,
    eigen_residual_free,
    lambda_bad,
    lambda_prime,
    multiplicity_one_check,
    shimura_compare,
    tilde_basis
)
from matz import to_rows
from ring import CycNumber, gauss_g1, legendre, parse_character, prime_power

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SUITES = ('gauss', 'sym', 'theta', 'cusps', 'hecke')
Task = Callable[[], VerificationReport]

# Characters with chi(-1) = 1 at level 4*15
EVEN_CHARACTERS_15 = ('trivial@3', 'quadratic@5', 'quadratic@3,quadratic@4')

# (identity, sampler, check, smallest scaling parameter)
SCALING_IDENTITIES = (
    ('conjugation-scaling', sample_scaling_instance, verify_conjugation_scaling, 0),
    ('mixed-conjugation', sample_mixed_instance, verify_mixed_conjugation, 0),
    ('column-scaling', sample_column_instance, verify_column_scaling, 1)
)
SCALING_SHAPES = tuple((n, q) for n in (1, 2, 3) for q in (3, 5))
SCALING_DRAW_FACTOR = 4
CONGRUENCES_PER_TYPE = 20


class SuiteReport(BaseModel):
    """Outcome of one or more suites; failures exclude non-applicable instances"""
    suites: List[str]
    seed: int
    trials: int
    passed: bool = True
    checked: int = 0
    failed: int = 0
    skipped: int = 0
    reports: List[VerificationReport] = Field(default_factory=list)


def _exact(identity: str, instance: Dict, lhs: CycNumber, rhs: CycNumber) -> VerificationReport:
    passed = lhs == rhs
    if not passed:
        logger.error(f"{identity} failed on {instance}")
    return VerificationReport(identity=identity, passed=passed, instance=instance,
                              lhs=lhs.to_dict(), rhs=rhs.to_dict())


def _flag(identity: str, instance: Dict, passed: bool, notes: Optional[List[str]] = None) -> VerificationReport:
    if not passed:
        logger.error(f"{identity} failed on {instance}")
    return VerificationReport(identity=identity, passed=passed, instance=instance, notes=notes or [])


class VerifierAgent:
    """Builds and runs the verification tasks of each suite"""

    def __init__(self, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS, max_workers: int = MAX_WORKERS,
                 unimodular_pairs: int = UNIMODULAR_PAIRS, unimodular_e: int = UNIMODULAR_E_PER_PAIR):
        self.seed = seed
        self.trials = trials
        self.max_workers = max_workers
        self.unimodular_pairs = unimodular_pairs
        self.unimodular_e = unimodular_e

    # Suite construction

    def gauss_tasks(self) -> List[Task]:
        rng = make_rng(self.seed)
        tasks: List[Task] = []
        for q in (3, 5, 7, 11, 13, 17, 19, 23):
            tasks.append(lambda q=q: _exact('gauss-g1-square', {'q': q}, gauss_g1(q) ** 2,
                                            CycNumber.from_rational(legendre(-1, q) * q)))
        tasks.append(lambda: verify_conjugation_scaling(Matrix([[1]]), Matrix([[1]]), 3, 1))
        for N in (3, 5, 15):
            tasks.append(lambda N=N: verify_odd_cusp_sign(N, 2))

        for n in (1, 2, 3):
            for _ in range(min(self.trials, self.unimodular_pairs)):
                C, D = random_coprime_pair(n, rng)
                for _ in range(self.unimodular_e):
                    E = random_unimodular(n, rng)
                    tasks.append(lambda C=C, D=D, E=E: verify_unimodular_invariance(C, D, E))
        for identity, sampler, check, low in SCALING_IDENTITIES:
            tasks.extend(self._scaling_tasks(rng, identity, sampler, check, low))
        return tasks

    def _scaling_tasks(self, rng: np.random.Generator, identity: str, sampler: Callable, check: Callable,
                       low: int) -> List[Task]:
        """Draws until `trials` instances satisfy the preconditions, cycling n in 1..3 and q in {3, 5}"""
        tasks: List[Task] = []
        draws = 0
        while len(tasks) < self.trials and draws < SCALING_DRAW_FACTOR * self.trials:
            n, q = SCALING_SHAPES[draws % len(SCALING_SHAPES)]
            draws += 1
            t = int(rng.integers(low, n + 1))
            found = sampler(n, q, t, rng)
            if found is None:
                continue
            M, N = found
            tasks.append(lambda M=M, N=N, q=q, t=t: check(M, N, q, t))
        if len(tasks) < self.trials:
            logger.warning(f"{identity}: {len(tasks)} of {self.trials} instances after {draws} draws")
            shortfall = {'found': len(tasks), 'wanted': self.trials}
            tasks.append(lambda: not_applicable(identity, shortfall, "instance draws exhausted"))
        return tasks

    def sym_tasks(self) -> List[Task]:
        tasks: List[Task] = []
        for q in (3, 5):
            for kind in (CharKind.TRIVIAL, CharKind.QUADRATIC):
                for b in range(5):
                    for c in range(5 - b):
                        instance = {'q': q, 'kind': kind.value, 'b': b, 'c': c}
                        tasks.append(lambda q=q, kind=kind, b=b, c=c, instance=instance: _exact(
                            'sym-closed-form', instance, sym_closed(q, kind, b, c), sym_bruteforce(q, kind, b, c)))
            for b in range(5):
                for c in range(b + 1):
                    tasks.append(lambda q=q, b=b, c=c: _flag(
                        'subspace-count', {'q': q, 'b': b, 'c': c}, beta(q, b, c) == count_subspaces(q, b, c)))
        tasks.append(lambda: _exact('sym-anchor', {'q': 3, 'kind': 'trivial', 'b': 2, 'c': 0},
                                    sym_closed(3, CharKind.TRIVIAL, 2, 0), CycNumber.from_rational(18)))
        tasks.append(lambda: _exact('sym-anchor', {'q': 3, 'kind': 'quadratic', 'b': 2, 'c': 0},
                                    sym_closed(3, CharKind.QUADRATIC, 2, 0), CycNumber.from_rational(-6)))
        return tasks

    def theta_tasks(self) -> List[Task]:
        rng = make_rng(self.seed)
        tasks: List[Task] = []
        taus = {1: np.array([[1j]]),
                2: np.array([[1j, 0.3], [0.3, 1j]])}
        counts = {1: max(10, self.trials // 2), 2: 3}
        for n, count in counts.items():
            tau = taus[n]
            for _ in range(count):
                gamma = random_gamma0_4(n, rng, 0.4, tau)
                if gamma is None:
                    tasks.append(lambda n=n: not_applicable('transformation-formula', {'n': n},
                                                            "no Gamma_0(4) element within the attempt cap"))
                    continue
                tasks.append(lambda gamma=gamma, tau=tau: verify_transformation(gamma, tau))
                _, _, C, D = split_blocks(gamma)
                Y = random_symmetric(n, rng)
                tasks.append(lambda C=C, D=D, Y=Y, tau=tau: verify_translation_law(C, D, Y, tau))
                E = random_unimodular(n, rng)
                tasks.append(lambda C=C, D=D, E=E, tau=tau: verify_sl_invariance(C, D, E, tau))
        return tasks

    def cusps_tasks(self) -> List[Task]:
        rng = make_rng(self.seed)
        tasks: List[Task] = []
        for n, N in ((1, 3), (2, 15), (3, 3)):
            types = enumerate_admissible(N, n)
            tasks.append(lambda n=n, N=N, types=types: _flag(
                'admissible-count', {'n': n, 'N': N}, len(types) == admissible_count(N, n)))
            for sigma in types:
                M = build_M_sigma(sigma)
                tasks.append(lambda sigma=sigma, M=M, N=N: _flag(
                    'classify-build', {'type': sigma.label()}, classify_cusp(M, N) == sigma))
                Es = [random_unimodular(n, rng) for _ in range(max(1, min(self.trials, CONGRUENCES_PER_TYPE)))]
                tasks.append(lambda sigma=sigma, M=M, N=N, Es=Es: _flag(
                    'classify-congruence', {'type': sigma.label(), 'E': [to_rows(E) for E in Es]},
                    all(classify_cusp(E * M * E.T, N) == sigma for E in Es)))
        return tasks

    def hecke_tasks(self) -> List[Task]:
        tasks: List[Task] = []
        for k in (7, 9):
            for character in EVEN_CHARACTERS_15:
                for n in (1, 2, 3):
                    ctx = HalfIntegralContext.build(n, k, 15, parse_character(character, 15))
                    tasks.append(lambda ctx=ctx, character=character: self._bad_prime_cross_check(ctx, character))
        ctx = HalfIntegralContext.build(2, 9, 15)
        tasks.append(lambda: self._multiplicity_one(ctx))
        tasks.append(lambda: self._tilde_basis(ctx))
        tasks.append(lambda: self._multiplicity_one(HalfIntegralContext.build(1, 7, 3)))
        for N, p in ((1, 3), (1, 5), (1, 7), (15, 7)):
            for k in (7, 9):
                for n in (1, 2, 3):
                    ctx = HalfIntegralContext.build(n, k, N)
                    tasks.append(lambda ctx=ctx, p=p: self._transform_cross_check(ctx, p))
        for N in (3, 5, 15):
            characters = ['trivial@4'] + [f"quadratic@{q}" for q in (3, 5) if N % q == 0]
            for p in (5, 7, 11):
                if N % p == 0:
                    continue
                for k in (7, 9):
                    for character in characters:
                        tasks.append(lambda N=N, p=p, k=k, character=character: self._shimura(N, k, character, p))
        return tasks

    @staticmethod
    def _bad_prime_cross_check(ctx: HalfIntegralContext, character: str) -> VerificationReport:
        instance = {'n': ctx.n, 'k': ctx.k, 'N': ctx.N, 'character': character}
        mismatches = []
        for q in ctx.primes:
            for sigma in ctx.partitions():
                d = sigma.slot_of(q)
                base = sigma.without_prime(q)
                for j in range(1, ctx.n + 1):
                    if A_coeff(ctx, base, q, d, j, 0) != lambda_bad(ctx, sigma, j, q):
                        mismatches.append(f"q={q} sigma={sigma.label()} j={j}")
                top = lambda_bad(ctx, sigma, ctx.n, q)
                if top.abs2() != prime_power(q, 2 * d * (ctx.k - d - 1)):
                    mismatches.append(f"|lambda| q={q} sigma={sigma.label()}")
        return _flag('bad-prime-diagonal', instance, not mismatches, mismatches)

    @staticmethod
    def _transform_cross_check(ctx: HalfIntegralContext, p: int) -> VerificationReport:
        instance = {'n': ctx.n, 'k': ctx.k, 'N': ctx.N, 'p': p}
        mismatches = [
            f"sigma={sigma.label()} j={j}"
            for sigma in ctx.partitions() for j in range(1, ctx.n + 1)
            if lambda_prime(ctx, sigma, j, p, 'closed') != lambda_prime(ctx, sigma, j, p, 'via-transform')
        ]
        return _flag('transformed-operator', instance, not mismatches, mismatches)

    @staticmethod
    def _multiplicity_one(ctx: HalfIntegralContext) -> VerificationReport:
        report = multiplicity_one_check(ctx)
        return _flag('multiplicity-one', {'n': ctx.n, 'k': ctx.k, 'N': ctx.N},
                     report.passed, [f"collision {a} {b}" for a, b in report.collisions] + report.notes)

    @staticmethod
    def _tilde_basis(ctx: HalfIntegralContext) -> VerificationReport:
        basis = tilde_basis(ctx)
        notes = []
        unitriangular = all(row.get(sigma) == 1 for sigma, row in basis.coefficients.items())
        eigen = {q: eigen_residual_free(ctx, basis, q) for q in ctx.primes}
        for q, verdicts in eigen.items():
            notes.extend(f"q={q} sigma={sigma} not an eigenvector" for sigma, ok in verdicts.items() if not ok)
        passed = basis.triangular_residual_free and unitriangular and not notes
        return _flag('tilde-basis', {'n': ctx.n, 'k': ctx.k, 'N': ctx.N}, passed, notes)

    @staticmethod
    def _shimura(N: int, k: int, character: str, p: int) -> VerificationReport:
        report = shimura_compare(N, k, parse_character(character, N), p)
        return _flag('shimura', {'N': N, 'k': k, 'character': character, 'p': p}, report.passed,
                     [f"{row.sigma}: {row.equal}" for row in report.rows])

    # Running

    def tasks(self, suite: str) -> List[Task]:
        builders = {
            'gauss': self.gauss_tasks,
            'sym': self.sym_tasks,
            'theta': self.theta_tasks,
            'cusps': self.cusps_tasks,
            'hecke': self.hecke_tasks
        }
        if suite not in builders:
            raise ValueError(f"unknown suite {suite}; expected one of {', '.join(SUITES + ('all',))}")
        return builders[suite]()

    @staticmethod
    def _guarded(task: Task) -> VerificationReport:
        try:
            return task()
        except Exception as e:
            logger.error(f"verification task raised: {e}")
            return VerificationReport(identity='task-error', passed=False, reason=str(e))

    def run(self, suite: str) -> SuiteReport:
        names = list(SUITES) if suite == 'all' else [suite]
        report = SuiteReport(suites=names, seed=self.seed, trials=self.trials)
        for name in names:
            tasks = self.tasks(name)
            logger.info(f"suite {name}: {len(tasks)} checks")
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                results = list(tqdm(pool.map(self._guarded, tasks), total=len(tasks),
                                    desc=f"verify {name}", disable=not SHOW_PROGRESS))
            report.reports.extend(results)
        for r in report.reports:
            if not r.applicable:
                report.skipped += 1
            else:
                report.checked += 1
                report.failed += 0 if r.passed else 1
        report.passed = report.failed == 0
        logger.info(f"verify {suite}: {report.checked} checked, {report.failed} failed, {report.skipped} skipped")
        return report
