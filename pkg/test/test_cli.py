"""
Tests for the command line entry point and the toolkit behind it
"""
import csv
import io
import json
import logging
import os

import pytest

from cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, _apply_budget, build_parser, main
from errors import ArgumentError
from hecke import OPERATORS
from toolkit import EisensteinToolkit, level_to_N

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_level_to_N():
    assert level_to_N(60) == 15
    assert level_to_N(4) == 1
    for level in (2, 6, 0):
        with pytest.raises(ArgumentError):
            level_to_N(level)


def test_cusps_command(capsys):
    code, document = _run_json(capsys, ['cusps', '--level', '12', '--degree', '1'])
    assert code == EXIT_OK
    assert document['schema'] == 1
    assert document['command'] == 'cusps'
    assert len(document['rows']) == 6
    assert document['rows'][0]['type'] == "(3,1)[0,0,+]"
    assert document['rows'][0]['status'] == 'nonvanishing'


def test_cusps_degree_two_level_four(capsys):
    code, document = _run_json(capsys, ['cusps', '--level', '4', '--degree', '2'])
    assert code == EXIT_OK
    assert len(document['rows']) == 7
    statuses = {row['type']: row['status'] for row in document['rows']}
    assert statuses["(1,1,1)[0,2,+]"] == 'zero'
    assert statuses["(1,1,1)[0,2,-]"] == 'undetermined'


def test_bad_level_is_usage_error(capsys):
    assert main(['cusps', '--level', '8', '--degree', '1']) == EXIT_USAGE
    assert main(['cusps', '--level', '36', '--degree', '1']) == EXIT_USAGE


def test_eigen_command(capsys):
    code, document = _run_json(capsys, ['eigen', '--level', '12', '--degree', '1', '--weight-num', '7',
                                        '--prime', '5', '--op', 'good'])
    assert code == EXIT_OK
    assert document['op'] == 'good'
    assert [row['value']['coeffs'][0] for row in document['rows']] == ["3126/1", "3126/1"]


def test_eigen_transformed_modes_match(capsys):
    argv = ['eigen', '--level', '60', '--degree', '2', '--weight-num', '9', '--prime', '7', '--op', 'prime']
    _, closed = _run_json(capsys, argv + ['--mode', 'closed'])
    _, transformed = _run_json(capsys, argv + ['--mode', 'via-transform'])
    assert [r['value'] for r in closed['rows']] == [r['value'] for r in transformed['rows']]


def test_eigen_errors(capsys):
    base = ['eigen', '--level', '60', '--degree', '1', '--weight-num', '7']
    assert main(base + ['--prime', '7', '--op', 'bad']) == EXIT_USAGE
    assert main(base + ['--prime', '3', '--op', 'bad', '--character', 'quadratic@3']) == EXIT_USAGE
    assert main(base + ['--prime', '3', '--op', 'good']) == EXIT_USAGE
    assert main(base + ['--prime', '7', '--op', 'good', '--character', 'cubic@5']) == EXIT_USAGE
    assert main(['eigen', '--level', '12', '--degree', '1', '--weight-num', '8', '--prime', '5',
                 '--op', 'good']) == EXIT_USAGE


def test_argparse_rejects_unknown_operator():
    with pytest.raises(SystemExit) as excinfo:
        main(['eigen', '--level', '12', '--degree', '1', '--weight-num', '7', '--prime', '5', '--op', 'spin'])
    assert excinfo.value.code == EXIT_USAGE


def test_shimura_command(capsys):
    code, document = _run_json(capsys, ['shimura', '--level', '20', '--weight-num', '7', '--prime', '3',
                                        '--character', 'gen^1:4@5'])
    assert code == EXIT_OK
    assert document['passed']
    assert all(row['equal'] for row in document['rows'])


def test_verify_command_writes_file(tmp_path):
    target = tmp_path / "report.json"
    code = main(['--output', str(target), 'verify', '--suite', 'cusps', '--seed', '2', '--trials', '1'])
    assert code == EXIT_OK
    document = json.loads(target.read_text())
    assert document['command'] == 'verify'
    assert document['passed']
    assert document['failed'] == 0


def test_verify_failure_exit_code(monkeypatch, capsys):
    def failing(self, suite, seed, trials):
        return {'command': 'verify', 'rows': []}, False

    monkeypatch.setattr(EisensteinToolkit, 'verify', failing)
    assert main(['verify', '--suite', 'sym']) == EXIT_FAILED


def test_csv_output(tmp_path):
    target = tmp_path / "table.csv"
    code = main(['--format', 'csv', '--output', str(target), 'eigen', '--level', '60', '--degree', '1',
                 '--weight-num', '7', '--prime', '3', '--op', 'bad'])
    assert code == EXIT_OK
    records = list(csv.DictReader(io.StringIO(target.read_text())))
    assert len(records) == 4
    assert {'sigma', 'status', 'value_L', 'value_coeffs', 'value_re', 'value_im'} <= set(records[0])


def test_parser_defaults():
    args = build_parser().parse_args(['verify'])
    assert args.suite == 'all'
    assert args.format == 'json'
    assert args.output is None


def test_parser_accepts_every_table_operator():
    parser = build_parser()
    for op in OPERATORS:
        args = parser.parse_args(['eigen', '--level', '12', '--degree', '1', '--weight-num', '7',
                                  '--prime', '5', '--op', op])
        assert args.op == op


def test_budget_flag_parsed_before_subcommand(monkeypatch):
    monkeypatch.setenv('GAUSS_SUM_BUDGET', '100000')
    _apply_budget(['--budget', '500', 'verify'])
    assert os.environ['GAUSS_SUM_BUDGET'] == '500'
    _apply_budget(['verify'])
    assert os.environ['GAUSS_SUM_BUDGET'] == '500'
