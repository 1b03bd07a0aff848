import json
import re
import zlib

from fractions import Fraction

import numpy as np
import sympy

from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import CoercionFailed, GeneratorsNeeded, PolynomialError

from qexp.lib.coeffring import MultiPoly, RatFun, SymbolTable
from qexp.lib.errors import ParseError
from qexp.lib.series import TruncSeries

DEFAULT_SYMBOLS = ("q", "a", "b")

LITERAL_CHARS = re.compile(r"^[\sA-Za-z0-9_+\-*/^()]+$")
IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

TRANSFORMATIONS = standard_transformations + (convert_xor,)


def default_table(*extra):
    '''
    Symbol table with q, a, b followed by the given extra names.
    '''
    return SymbolTable(DEFAULT_SYMBOLS).extend(extra)


def _poly_from_sympy(expr, table):
    '''
    Converts a sympy polynomial expression to (MultiPoly with integer coefficients, positive integer denominator).
    '''
    gens = [sympy.Symbol(name) for name in table.names]

    try:
        poly = sympy.Poly(expr, *gens, domain="QQ")
    except (PolynomialError, GeneratorsNeeded, CoercionFailed) as err:
        raise ParseError("Not a rational function in {}: {}".format(", ".join(table.names), err))

    terms = poly.terms()
    common = 1

    for _, coeff in terms:
        common = sympy.ilcm(common, sympy.Rational(coeff).q)

    result = {}

    for monom, coeff in terms:
        coeff = sympy.Rational(coeff) * common
        result[table.pack(monom)] = int(coeff.p)

    return MultiPoly(table, result), int(common)


def parse_ratfun(text, table=None):
    '''
    Parses a literal over symbols, integers, + - * / ^ and parentheses.

    Returns the RatFun and the symbol table it lives in, which extends the
    given table (q, a, b by default) by any undeclared names.
    '''
    if table is None:
        table = default_table()

    if not isinstance(text, str) or not text.strip() or not LITERAL_CHARS.match(text):
        raise ParseError("Malformed rational function literal: {!r}".format(text))

    table = table.extend(IDENTIFIER.findall(text))
    local = {name: sympy.Symbol(name) for name in table.names}

    try:
        expr = parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS)
    except Exception as err:
        raise ParseError("Malformed rational function literal {!r}: {}".format(text, err))

    if not isinstance(expr, sympy.Expr) or expr.has(sympy.zoo, sympy.oo, sympy.nan):
        raise ParseError("Not a finite rational function: {!r}".format(text))

    num_expr, den_expr = sympy.fraction(sympy.together(expr))

    if den_expr == 0:
        raise ParseError("Zero denominator in literal: {!r}".format(text))

    num, num_scale = _poly_from_sympy(num_expr, table)
    result = RatFun.from_poly(num) * Fraction(1, num_scale)

    # Keep the denominator factored as sympy finds it:
    content, factors = sympy.factor_list(den_expr, *[sympy.Symbol(name) for name in table.names])

    for factor, multiplicity in factors:
        poly, scale = _poly_from_sympy(factor, table)
        result = result * Fraction(scale) ** multiplicity / RatFun.from_poly(poly) ** multiplicity

    return result / RatFun.from_fraction(table, Fraction(str(content))), table


def parse_assignment(text, table=None):
    '''
    Parses "name=literal" into (name, RatFun, table).
    '''
    name, sep, literal = text.partition("=")
    name = name.strip()

    if not sep or not IDENTIFIER.fullmatch(name):
        raise ParseError("Expected NAME=LITERAL, got {!r}".format(text))

    value, table = parse_ratfun(literal, table)

    return name, value, table


def to_sympy(value):
    '''
    Converts a RatFun (or MultiPoly) to a sympy expression.
    '''
    if isinstance(value, RatFun):
        return to_sympy(value.num) / to_sympy(value.den)

    gens = [sympy.Symbol(name) for name in value.table.names]
    expr = sympy.Integer(0)

    for key, coeff in value.terms.items():
        term = sympy.Integer(coeff)

        for gen, exponent in zip(gens, value.table.unpack(key)):
            term *= gen ** exponent

        expr += term

    return expr


def seeded_rng(seed, stream=""):
    '''
    Deterministic generator for one named stream of randomized inputs.
    '''
    return np.random.default_rng([seed, zlib.crc32(stream.encode("utf8"))])


def random_rational(rng, low=-9, high=9):
    '''
    Rational with numerator in [low, high] and denominator in [1, high].
    '''
    return Fraction(int(rng.integers(low, high + 1)), int(rng.integers(1, high + 1)))


def random_series(rng, table, order):
    return TruncSeries(table, [random_rational(rng) for _ in range(order + 1)])


def load_points(path):
    '''
    Reads numeric evaluation points from a JSON file holding a list of
    {symbol: value} objects; values are numbers or strings such as "1/3".
    '''
    with open(path, encoding="utf8") as handle:
        try:
            points = json.load(handle)
        except ValueError as err:
            raise ParseError("Malformed points file {}: {}".format(path, err))

    if not isinstance(points, list) or not all(isinstance(point, dict) for point in points):
        raise ParseError("Points file must hold a JSON list of objects: {}".format(path))

    return [{name: str(value) for name, value in point.items()} for point in points]
