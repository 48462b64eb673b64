# Agents package
from .cache_agent import CacheAgent
from .response_formatter_agent import FORMATS, ResponseFormatterAgent
from .verifier_agent import SUITES, SuiteReport, VerifierAgent

__all__ = ['CacheAgent', 'FORMATS', 'ResponseFormatterAgent', 'SUITES', 'SuiteReport', 'VerifierAgent']
