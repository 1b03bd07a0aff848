import json
import time

from contextlib import contextmanager
from functools import wraps

import click

from ocrd_utils import getLogger, initLogging

from qexp.expansion.identities import registered_names, run_all, run_check
from qexp.expansion.inversion import expand_closed_formula, expand_triangular, gn_polynomials, inverse_pair
from qexp.expansion.numeric import run_numeric
from qexp.lib.errors import QexpError
from qexp.lib.series import TruncSeries, base_element, partial_theta
from qexp.lib.util import load_points, parse_ratfun
from qexp.tool import PARAMETERS, RunConfig, default

_LOGGING = {"initialized": False}

BUILTINS = ("coogan_ono", "one", "basek")


def _init_logging(level):
    if not _LOGGING["initialized"]:
        initLogging()
        _LOGGING["initialized"] = True

    getLogger("qexp").setLevel(level)


@contextmanager
def _usage_errors():
    # Parse, order and domain errors are the caller's fault:
    try:
        yield
    except QexpError as err:
        raise click.UsageError(str(err))


def qexp_cli_options(f):
    '''
    Adds the options every command shares and hands the command a RunConfig.
    '''

    @wraps(f)
    def wrapper(order, output, seed, precision, tol, specializations, **kwargs):
        with _usage_errors():
            config = RunConfig.from_options(order, output, seed, precision, tol, specializations)

            return f(config, **kwargs)

    options = [
        click.option('--n', 'order', type=int, default=None, help="Truncation order (default {})".format(default('order'))),
        click.option('--output', type=click.Choice(PARAMETERS['output']['enum']), default=None, help="Report format"),
        click.option('--seed', type=int, default=None, help="Seed of randomized inputs"),
        click.option('--precision', type=int, default=None, help="Bits of numeric precision"),
        click.option('--tol', default=None, help="Numeric tolerance"),
        click.option('--set', 'specializations', multiple=True, metavar='NAME=LITERAL', help="Specialize a symbol")
    ]

    for option in reversed(options):
        wrapper = option(wrapper)

    return wrapper


def _emit(config, payload, lines):
    if config.output == 'json':
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def _fail(passed):
    if not passed:
        click.get_current_context().exit(1)


def _assignments(config, table):
    '''
    Parses the --set literals whose names occur in the table; returns them with
    the table widened by any new symbols they bring in.
    '''

    assignments = []

    for name, literal in config.specializations:
        if name in table:
            value, table = parse_ratfun(literal, table)
            assignments.append((name, value))

    return [(name, value.embed(table)) for name, value in assignments], table


def _parameters(config, a_text, b_text):
    '''
    Parses a and b over one symbol table and applies the --set specializations to them.
    '''

    a, table = parse_ratfun(a_text)
    b, table = parse_ratfun(b_text, table)
    assignments, table = _assignments(config, table)
    a, b = a.embed(table), b.embed(table)

    if assignments:
        a, b = a.substitute(assignments), b.substitute(assignments)

    return a, b


@click.group()
@click.option('--log-level', type=click.Choice(PARAMETERS['log_level']['enum']), default=default('log_level'), help="Level of the qexp loggers")
def qexp_cli(log_level):
    '''
    Exact q-expansions in the basis z^n (az;q)_n/(bz;q)_n and verification of identities built on them.
    '''
    _init_logging(log_level)


@qexp_cli.command()
@qexp_cli_options
@click.option('--which', type=click.Choice(PARAMETERS['which']['enum']), default=default('which'), help="A (base matrix) or B (its inverse)")
@click.option('--a', 'a_text', default=default('a'), help="Literal for a")
@click.option('--b', 'b_text', default=default('b'), help="Literal for b")
def matrix(config, which, a_text, b_text):
    a, b = _parameters(config, a_text, b_text)
    base, inverse = inverse_pair(a, b, config.order)
    result = base if which == 'A' else inverse

    payload = dict(result.to_json(), which=which, a=a.render(), b=b.render())

    _emit(config, payload, ["{} (a={}, b={}, N={})".format(which, a.render(), b.render(), config.order)] + result.render_rows())


def _series(config, table, a, b, coeffs, builtin, k):
    order = config.order

    if coeffs is not None:
        values = []

        for literal in coeffs.split(','):
            value, table = parse_ratfun(literal, table)
            values.append(value)

        if len(values) > order + 1:
            values = values[:order + 1]

        # a and b are specialized already, the literals are not:
        assignments, table = _assignments(config, table)
        values = [value.embed(table) for value in values]

        if assignments:
            values = [value.substitute(assignments) for value in values]

        return TruncSeries(table, values + [0] * (order + 1 - len(values))), table

    if builtin == 'one':
        return TruncSeries.one(table, order), table

    if builtin == 'basek':
        return base_element(k, a, b, order), table

    # (1 + z) sum_n (-1)^n z^(2n) q^(n^2):
    return partial_theta(2, table.q, 2, order).mul_linear(-1), table


@qexp_cli.command()
@qexp_cli_options
@click.option('--coeffs', default=None, help="Comma-separated coefficient literals of F")
@click.option('--builtin', type=click.Choice(BUILTINS), default=None, help="Named series F")
@click.option('--k', type=int, default=0, help="Index of the base element for --builtin basek")
@click.option('--a', 'a_text', default=default('a'), help="Literal for a")
@click.option('--b', 'b_text', default=default('b'), help="Literal for b")
def expand(config, coeffs, builtin, k, a_text, b_text):
    if (coeffs is None) == (builtin is None):
        raise click.UsageError("Give exactly one of --coeffs and --builtin")

    a, b = _parameters(config, a_text, b_text)
    F, table = _series(config, a.table, a, b, coeffs, builtin, k)
    a, b = a.embed(table), b.embed(table)

    triangular = expand_triangular(F, a, b)
    closed = expand_closed_formula(F, a, b)
    difference = triangular.first_difference(closed)

    payload = {
        "a": a.render(),
        "b": b.render(),
        "order": F.order,
        triangular.method: triangular.to_json()["coeffs"],
        closed.method: closed.to_json()["coeffs"],
        "agree": difference is None,
        "first_difference": difference
    }

    lines = ["c_{} = {}".format(n, coeff.render()) for n, coeff in enumerate(closed.coeffs)]
    lines.append("methods agree" if difference is None else "methods differ first at c_{}".format(difference))

    _emit(config, payload, lines)
    _fail(difference is None)


@qexp_cli.command()
@qexp_cli_options
def gn(config):
    values = gn_polynomials(config.order)[1:]

    payload = {"order": config.order, "g": [value.render() for value in values]}

    _emit(config, payload, ["g_{} = {}".format(n, value.render()) for n, value in enumerate(values, 1)])


def _report(config, reports):
    _emit(config, [report.to_json() for report in reports], [report.to_text() for report in reports])
    _fail(all(report.passed for report in reports))


@qexp_cli.command()
@qexp_cli_options
@click.argument('names', nargs=-1, required=True)
def verify(config, names):
    known = registered_names()
    unknown = [name for name in names if name not in known]

    if unknown:
        raise click.UsageError("Unknown check(s): {}. Registered: {}".format(", ".join(unknown), ", ".join(known)))

    reports = [run_check(name, config.order, config.seed, config.specializations) for name in names]

    _report(config, reports)


@qexp_cli.command('verify-all')
@qexp_cli_options
@click.option('--filter', 'pattern', default=None, help="Substring or shell pattern of check names")
def verify_all(config, pattern):
    reports = run_all(config.order, pattern, config.seed, config.specializations, progress=config.output == 'text')

    _report(config, reports)


@qexp_cli.command('numeric-verify')
@qexp_cli_options
@click.option('--identity', 'identities', multiple=True, help="Numeric identity to check (default: all)")
@click.option('--points', type=click.Path(exists=True, dir_okay=False), default=None, help="JSON list of points")
def numeric_verify(config, identities, points):
    if points is not None:
        points = load_points(points)

    reports = run_numeric(list(identities) or None, points, config.tolerance, config.precision)

    _report(config, reports)


@qexp_cli.command()
@qexp_cli_options
@click.option('--filter', 'pattern', default=None, help="Substring or shell pattern of check names")
def bench(config, pattern):
    rows = []

    for name in registered_names(pattern):
        start = time.perf_counter()
        report = run_check(name, config.order, config.seed, config.specializations)
        rows.append({"name": name, "seconds": round(time.perf_counter() - start, 4), "passed": report.passed})

    _emit(config, rows, ["{:<32} {:>9.4f}s {}".format(row["name"], row["seconds"], "PASS" if row["passed"] else "FAIL") for row in rows])
    _fail(all(row["passed"] for row in rows))
