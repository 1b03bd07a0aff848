import json

import pytest

from click.testing import CliRunner

from qexp.cli import qexp_cli


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(qexp_cli, list(args))

    return invoke


def test_matrix_json(run):
    result = run('matrix', '--which', 'B', '--n', '3', '--output', 'json')

    assert result.exit_code == 0, result.output

    payload = json.loads(result.stdout)

    assert payload['entries'][2][1] == "a - b"
    assert payload['which'] == 'B'


def test_matrix_order_zero(run):
    result = run('matrix', '--which', 'A', '--n', '0', '--output', 'json')

    assert json.loads(result.stdout)['entries'] == [["1"]]


def test_matrix_text(run):
    result = run('matrix', '--n', '2')

    assert result.exit_code == 0
    assert result.stdout.startswith("B (a=a, b=b, N=2)")


def test_malformed_literal(run):
    assert run('matrix', '--a', '((').exit_code == 2


def test_expand_coogan_ono(run):
    result = run('expand', '--builtin', 'coogan_ono', '--a', '1', '--b=-q', '--n', '12', '--output', 'json')

    assert result.exit_code == 0, result.output

    payload = json.loads(result.stdout)

    assert payload['closed_formula'] == ["1"] * 13
    assert payload['triangular_solve'] == payload['closed_formula']
    assert payload['agree'] is True
    assert payload['first_difference'] is None


def test_expand_coefficients_are_padded(run):
    result = run('expand', '--coeffs', '1', '--n', '5', '--output', 'json')

    assert json.loads(result.stdout)['closed_formula'] == ["1", "0", "0", "0", "0", "0"]


def test_expand_base_element(run):
    result = run('expand', '--builtin', 'basek', '--k', '3', '--n', '5', '--output', 'json')

    assert json.loads(result.stdout)['closed_formula'] == ["0", "0", "0", "1", "0", "0"]


def test_expand_needs_one_source(run):
    assert run('expand').exit_code == 2
    assert run('expand', '--coeffs', '1', '--builtin', 'one').exit_code == 2


def test_expand_with_specialization(run):
    result = run('expand', '--builtin', 'one', '--n', '3', '--set', 'b=0', '--output', 'json')

    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)['b'] == "0"


def test_verify(run):
    result = run('verify', 'rogers_fine', '--n', '4', '--output', 'json')

    assert result.exit_code == 0, result.output

    reports = json.loads(result.stdout)

    assert len(reports) == 1
    assert reports[0]['name'] == 'rogers_fine'


def test_verify_unknown(run):
    result = run('verify', 'nosuch')

    assert result.exit_code == 2
    assert 'rogers_fine' in result.output


def test_verify_all_is_reproducible(run):
    first = run('verify-all', '--filter', 'heine', '--n', '3', '--output', 'json')
    second = run('verify-all', '--filter', 'heine', '--n', '3', '--output', 'json')

    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout
    assert [report['name'] for report in json.loads(first.stdout)] == ["heine_4phi3", "heine_4phi3_diagonal", "heine_third"]


def test_gn(run):
    result = run('gn', '--n', '3', '--output', 'json')

    assert json.loads(result.stdout)['g'] == ["1", "-q + 1", "q^3 - 2*q^2 + 1"]


def test_numeric_verify(run, tmp_path):
    points = tmp_path / 'points.json'
    points.write_text(json.dumps([{"q": "0.3", "z": "0.4"}, {"q": 0.1, "z": -0.2}]))

    result = run('numeric-verify', '--identity', 'coogan_ono', '--points', str(points), '--output', 'json')

    assert result.exit_code == 0, result.output
    assert len(json.loads(result.stdout)) == 2


def test_expand_specializes_coefficient_literals(run):
    result = run('expand', '--coeffs', '1,t', '--set', 't=0', '--n', '2', '--output', 'json')

    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)['closed_formula'] == ["1", "0", "0"]


@pytest.mark.parametrize("content", ['[{"q": 0.3,', '{"q":', '{"q": "0.3", "z": "0.4"}', '[1, 2]'])
def test_numeric_verify_malformed_points(run, tmp_path, content):
    points = tmp_path / 'points.json'
    points.write_text(content)

    result = run('numeric-verify', '--identity', 'coogan_ono', '--points', str(points))

    assert result.exit_code == 2
    assert 'points file' in result.output.lower()


def test_bench(run):
    result = run('bench', '--filter', 'inverse_pair', '--n', '3', '--output', 'json')

    assert result.exit_code == 0, result.output
    assert [row['name'] for row in json.loads(result.stdout)] == ['inverse_pair']


@pytest.mark.parametrize("args", [
    ('matrix', '--set', 'q'),
    ('matrix', '--n', '-1'),
    ('numeric-verify', '--precision', '10'),
    ('numeric-verify', '--tol', 'small'),
    ('numeric-verify', '--tol', 'nan'),
    ('numeric-verify', '--tol', 'inf'),
    ('numeric-verify', '--tol', '0')
])
def test_invalid_options(run, args):
    assert run(*args).exit_code == 2
