import numpy as np
import pytest

from qexp.expansion.inversion import (
    CoefficientFormula,
    b_column1,
    base_matrix,
    bzero_coeffs,
    carlitz_coeffs,
    expand_closed_formula,
    expand_triangular,
    gn_polynomials,
    inverse_by_formula,
    PAIR_CACHE_SIZE,
    _pair,
    inverse_pair,
    lt_inverse,
    matrix_entry_formula,
    polynomial_coeffs,
    polynomial_series,
    shifted_base_coeffs,
    sn_polynomial
)
from qexp.lib.coeffring import RatFun, SymbolTable
from qexp.lib.errors import OrderError, SingularMatrixError
from qexp.lib.series import TruncSeries, partial_theta
from qexp.lib.struct import LTMatrix
from qexp.lib.util import random_series, seeded_rng


def test_inverse_pair(table, a, b):
    matrix, inverse = inverse_pair(a, b, 5)
    identity = LTMatrix.identity(table, 5)

    assert (matrix @ inverse).first_mismatch(identity) is None
    assert (inverse @ matrix).first_mismatch(identity) is None
    assert inverse.has_unit_diagonal()


def test_inverse_entries(table, q, a, b):
    _, inverse = inverse_pair(a, b, 3)

    assert inverse[2, 1].render() == "a - b"
    assert inverse[1, 2].is_zero()
    assert inverse[3, 3].equals(1)


def test_base_matrix_order_zero(a, b):
    assert base_matrix(a, b, 0).to_json() == {"n": 0, "entries": [["1"]]}


def test_singular_matrix(table):
    two = RatFun.from_int(table, 2)
    matrix = LTMatrix.from_function(table, 2, lambda n, k: two if n == k else RatFun.zero(table))

    with pytest.raises(SingularMatrixError):
        lt_inverse(matrix)


def test_matrix_out_of_range(a, b):
    with pytest.raises(OrderError):
        base_matrix(a, b, 2)[3, 0]


def test_b_column_peel(a, b):
    _, inverse = inverse_pair(a, b, 6)
    column = b_column1(a, b, 6)

    assert column[0].is_zero()
    assert all(column[n].equals(inverse[n, 1]) for n in range(1, 7))


def test_dual_path_coefficients(table, a, b):
    rng = seeded_rng(11, "test")
    formula = CoefficientFormula(a, b, 6)

    for _ in range(5):
        F = random_series(rng, table, 6)

        assert expand_triangular(F, a, b).first_difference(formula.expand(F)) is None


def test_dual_path_entries(a, b):
    _, inverse = inverse_pair(a, b, 6)

    assert inverse_by_formula(a, b, 6).first_mismatch(inverse) is None
    assert matrix_entry_formula(4, 2, a, b).equals(inverse[4, 2])


def test_matrix_entry_outside_triangle(a, b):
    with pytest.raises(OrderError):
        matrix_entry_formula(2, 3, a, b)


def test_short_column(a, b):
    with pytest.raises(OrderError):
        CoefficientFormula(a, b, 4, column=(RatFun.zero(a.table), RatFun.one(a.table)))


def test_reconstruct(table, a, b):
    F = random_series(seeded_rng(3, "reconstruct"), table, 5)
    result = expand_closed_formula(F, a, b)

    assert result.method == "closed_formula"
    assert result.reconstruct(a, b).first_difference(F) is None


def test_coogan_ono_expansion():
    table = SymbolTable(("q",))
    q = table.q
    F = partial_theta(2, q, 2, 14).mul_linear(-1)

    result = expand_closed_formula(F, RatFun.one(table), -q)

    assert all(coeff.equals(1) for coeff in result.coeffs)


def test_gn_polynomials():
    g = gn_polynomials(4)
    q = g[1].table.q

    assert g[0].is_zero()
    assert g[1].equals(1)
    assert g[2].equals(1 - q)
    assert g[3].equals(1 - 2 * q ** 2 + q ** 3)


def test_gn_specialization():
    table = SymbolTable(("q", "a"))
    a = table.gen("a")
    column = b_column1(a, a * table.q, 6)
    g = gn_polynomials(6, table)

    assert all(column[n].equals(g[n] * a ** (n - 1)) for n in range(1, 7))


def test_carlitz():
    table = SymbolTable(("q", "b"))
    b = table.gen("b")
    F = random_series(seeded_rng(5, "carlitz"), table, 5)

    result = carlitz_coeffs(F, b)

    assert result.method == "carlitz"
    assert result.first_difference(expand_triangular(F, RatFun.zero(table), b)) is None


def test_b_zero():
    table = SymbolTable(("q", "a"))
    a = table.gen("a")
    F = random_series(seeded_rng(5, "b_zero"), table, 5)

    result = bzero_coeffs(F, a)

    assert result.method == "b_zero"
    assert result.first_difference(expand_triangular(F, a, RatFun.zero(table))) is None


def test_b_eq_aq():
    table = SymbolTable(("q", "a"))
    a = table.gen("a")
    F = random_series(seeded_rng(5, "b_eq_aq"), table, 5)

    result = shifted_base_coeffs(F, a)

    assert result.method == "b_eq_aq"
    assert result.first_difference(expand_triangular(F, a, a * table.q)) is None


def test_polynomial_coeffs():
    table = SymbolTable(("q", "a", "t", "x"))
    a = table.gen("a")
    ts = [table.gen("t"), table.gen("x")]

    result = polynomial_coeffs(ts, a, 5)
    F = polynomial_series(ts, a, 5)

    assert result.coeffs[0].equals(1)
    assert result.first_difference(expand_triangular(F, a, a * table.q)) is None


def test_sn_vanishes_at_geometric_points():
    table = SymbolTable(("q", "a", "b", "y"))
    a, b, y = table.gen("a"), table.gen("b"), table.gen("y")

    for n in range(1, 4):
        numerator = RatFun.from_poly(sn_polynomial(n, a, b, y).num)

        for k in range(n):
            assert numerator.substitute({"y": a * table.q ** k}).is_zero()


def test_lt_matrix_json_is_square_rows(a, b):
    rows = inverse_pair(a, b, 2)[1].to_json()["entries"]

    assert [len(row) for row in rows] == [1, 2, 3]
    assert isinstance(inverse_pair(a, b, 2)[1].entries, np.ndarray)


def test_inverse_pair_cache_is_bounded(table, a, b):
    assert inverse_pair(a, b, 3) is inverse_pair(a, b, 3)

    for k in range(PAIR_CACHE_SIZE + 5):
        inverse_pair(a, b * (k + 2), 1)

    assert _pair.cache_info().currsize <= PAIR_CACHE_SIZE
