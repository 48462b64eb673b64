"""
Eisenstein Toolkit Orchestration Engine
Routes the command-line requests to the cusp, Hecke and verification layers and formats their results
"""
import logging
from typing import Any, Dict, Optional, Tuple

from agents.cache_agent import CacheAgent
from agents.response_formatter_agent import ResponseFormatterAgent
from agents.verifier_agent import VerifierAgent
from config import DEFAULT_SEED, DEFAULT_TRIALS
from cusps import build_M_sigma, enumerate_admissible, vanishing_status
from errors import ArgumentError
from hecke import HalfIntegralContext, eigen_table, shimura_compare
from matz import to_rows
from ring import parse_character

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def level_to_N(level: int) -> int:
    """N from a level 4N"""
    if level < 4 or level % 4:
        raise ArgumentError(f"level {level} is not of the form 4N")
    return level // 4


class EisensteinToolkit:
    """Main orchestration engine"""

    def __init__(self):
        self.cache_agent = CacheAgent()
        self.formatter_agent = ResponseFormatterAgent()

    def cusps(self, level: int, degree: int, character: Optional[str] = None) -> Dict[str, Any]:
        """One row per admissible type with its sigma-type matrix and vanishing status"""
        N = level_to_N(level)
        chi = parse_character(character, N)
        rows = []
        for sigma in enumerate_admissible(N, degree):
            status = vanishing_status(sigma, chi)
            rows.append({
                'type': sigma.label(),
                'partition': list(sigma.partition.parts),
                'd': sigma.d,
                'dprime': sigma.dprime,
                'eps': sigma.eps,
                'M_sigma': [list(r) for r in to_rows(build_M_sigma(sigma))],
                'status': status.value,
                'reason': status.reason,
                'assumption': status.assumption
            })
        logger.info(f"cusps level={level} degree={degree}: {len(rows)} types")
        return {'command': 'cusps', 'level': level, 'degree': degree, 'character': chi.describe(), 'rows': rows}

    def verify(self, suite: str, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS) -> Tuple[Dict[str, Any], bool]:
        report = VerifierAgent(seed=seed, trials=trials).run(suite)
        payload = report.model_dump()
        payload['command'] = 'verify'
        payload['rows'] = payload.pop('reports')
        return payload, report.passed

    def eigen(self, level: int, degree: int, weight_num: int, prime: int, op: str, j: int,
              character: Optional[str] = None, mode: str = 'closed', partition: Optional[int] = None) -> Dict[str, Any]:
        N = level_to_N(level)
        ctx = HalfIntegralContext.build(degree, weight_num, N, parse_character(character, N))
        table = eigen_table(ctx, op, prime, j, mode=mode, partition=partition, cache=self.cache_agent)
        payload = table.model_dump()
        payload.update({'command': 'eigen', 'level': level, 'mode': mode})
        return payload

    def shimura(self, level: int, weight_num: int, prime: int, character: Optional[str] = None) -> Tuple[Dict[str, Any], bool]:
        N = level_to_N(level)
        report = shimura_compare(N, weight_num, parse_character(character, N), prime)
        payload = report.model_dump()
        payload.update({'command': 'shimura', 'level': level})
        return payload, report.passed

    def render(self, payload: Dict[str, Any], fmt: str = 'json') -> str:
        return self.formatter_agent.format_response(payload, fmt)
