"""
Command Line Interface - cusp tables, eigenvalue tables, verification suites and the degree-one comparison
Exit codes: 0 success, 1 failed verification or unexpected error, 2 usage error
"""
import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

logging.basicConfig(level=os.getenv('LOG_LEVEL', 'INFO'))
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

SUITE_CHOICES = ('gauss', 'sym', 'theta', 'cusps', 'hecke', 'all')


def build_parser() -> argparse.ArgumentParser:
    from hecke import OPERATORS

    parser = argparse.ArgumentParser(
        prog='eisenstein',
        description="Gauss sums, cusp types and Hecke eigenvalues of half-integral weight Siegel Eisenstein series"
    )
    parser.add_argument("--format", choices=['json', 'csv'], default='json', help="Output format (default: json).")
    parser.add_argument("--output", type=Path, default=None, help="Write the result here instead of stdout.")
    parser.add_argument("--budget", type=int, default=None, help="Gauss sum enumeration budget for this run.")
    sub = parser.add_subparsers(dest='command', required=True)

    cusps = sub.add_parser('cusps', help="Admissible types for Gamma_0(4N).")
    cusps.add_argument("--level", type=int, required=True, help="Level 4N with N odd squarefree.")
    cusps.add_argument("--degree", type=int, required=True)
    cusps.add_argument("--character", type=str, default=None, help="e.g. quadratic@5,quadratic@4")

    verify = sub.add_parser('verify', help="Run identity suites.")
    verify.add_argument("--suite", choices=SUITE_CHOICES, default='all')
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--trials", type=int, default=None)

    eigen = sub.add_parser('eigen', help="Eigenvalue table, one row per partition.")
    eigen.add_argument("--level", type=int, required=True)
    eigen.add_argument("--degree", type=int, required=True)
    eigen.add_argument("--weight-num", type=int, required=True, dest='weight_num', help="Odd k for weight k/2.")
    eigen.add_argument("--character", type=str, default=None)
    eigen.add_argument("--prime", type=int, required=True)
    eigen.add_argument("--op", choices=OPERATORS, required=True)
    eigen.add_argument("--j", type=int, default=1)
    eigen.add_argument("--mode", choices=['closed', 'via-transform'], default='closed')
    eigen.add_argument("--partition", type=int, default=None, help="Index of a single partition.")

    shimura = sub.add_parser('shimura', help="Degree-one comparison with integral weight.")
    shimura.add_argument("--level", type=int, required=True)
    shimura.add_argument("--weight-num", type=int, required=True, dest='weight_num')
    shimura.add_argument("--prime", type=int, required=True)
    shimura.add_argument("--character", type=str, default=None)
    return parser


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)
        logger.info(f"wrote {output}")


def _apply_budget(argv: Optional[List[str]]) -> None:
    """--budget must reach the environment before config is first imported"""
    early = argparse.ArgumentParser(add_help=False)
    early.add_argument("--budget", type=int, default=None)
    known, _ = early.parse_known_args(argv)
    if known.budget is not None:
        os.environ['GAUSS_SUM_BUDGET'] = str(known.budget)


def main(argv: Optional[List[str]] = None) -> int:
    _apply_budget(argv)
    args = build_parser().parse_args(argv)

    from config import DEFAULT_SEED, DEFAULT_TRIALS, GAUSS_SUM_BUDGET
    from errors import ArgumentError
    from toolkit import EisensteinToolkit

    if args.budget is not None and args.budget != GAUSS_SUM_BUDGET:
        logger.warning(f"--budget {args.budget} ignored: configuration already loaded with {GAUSS_SUM_BUDGET}")

    toolkit = EisensteinToolkit()
    try:
        passed = True
        if args.command == 'cusps':
            payload = toolkit.cusps(args.level, args.degree, args.character)
        elif args.command == 'verify':
            seed = DEFAULT_SEED if args.seed is None else args.seed
            trials = DEFAULT_TRIALS if args.trials is None else args.trials
            payload, passed = toolkit.verify(args.suite, seed, trials)
        elif args.command == 'eigen':
            payload = toolkit.eigen(args.level, args.degree, args.weight_num, args.prime, args.op, args.j,
                                    args.character, args.mode, args.partition)
        else:
            payload, passed = toolkit.shimura(args.level, args.weight_num, args.prime, args.character)
        _emit(toolkit.render(payload, args.format), args.output)
        return EXIT_OK if passed else EXIT_FAILED
    except (ArgumentError, ValueError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
