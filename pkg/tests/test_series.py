import pytest

from qexp.lib.coeffring import RatFun
from qexp.lib.errors import NotInvertibleError, OrderError, PoleError, StructureError
from qexp.lib.series import (
    TruncSeries,
    base_element,
    inv_pochhammer_infinite,
    param_pochhammer,
    partial_theta,
    pochhammer_finite,
    pochhammer_infinite,
    pochhammer_ratio,
    qhyper,
    series_arith,
    series_invert,
    shift_z_by_q_power
)


def same(series, expected):
    return len(series) == len(expected) and all(left.equals(right) for left, right in zip(series, expected))


def test_pochhammer_finite(table, q, a):
    series = pochhammer_finite(a, 2, 4)

    assert same(series, [1, -a - a * q, a * a * q, 0, 0])


def test_pochhammer_negative_index(table, q, b):
    # (bz;q)_{-1} = 1/(1 - bz/q):
    series = pochhammer_finite(b, -1, 3)

    assert same(series, [(b / q) ** n for n in range(4)])


def test_pochhammer_zero_index(table, a):
    assert same(pochhammer_finite(a, 0, 3), [1, 0, 0, 0])


def test_infinite_products_are_inverse(table, a):
    product = pochhammer_infinite(a, 6) * inv_pochhammer_infinite(a, 6)

    assert same(product, [1, 0, 0, 0, 0, 0, 0])


def test_infinite_product_splits(table, q, a):
    # (az;q)_oo = (az;q)_2 (aq^2 z;q)_oo:
    left = pochhammer_infinite(a, 5)
    right = pochhammer_finite(a, 2, 5) * pochhammer_infinite(a * q ** 2, 5)

    assert left.first_difference(right) is None


def test_pochhammer_ratio_cancels(table, q, a):
    series = pochhammer_ratio(table, [(a, 3)], [(a, 3)], 5)

    assert same(series, [1, 0, 0, 0, 0, 0])


def test_param_pochhammer(table, q, a):
    assert param_pochhammer(a, 2).equals((1 - a) * (1 - a * q))
    assert param_pochhammer(a, -1).equals(RatFun.one(table) / (1 - a / q))

    with pytest.raises(PoleError):
        param_pochhammer(q, -1)


def test_arith_truncates_to_smaller_order(table, a):
    short = TruncSeries(table, [1, a])
    long = TruncSeries(table, [1, 1, 1, 1])

    assert (short + long).order == 1
    assert series_arith("mul", short, long).order == 1
    assert series_arith("scalar_mul", long, a)[3].equals(a)


def test_invert(table):
    geometric = series_invert(TruncSeries(table, [1, -1, 0, 0, 0]))

    assert same(geometric, [1, 1, 1, 1, 1])

    with pytest.raises(NotInvertibleError):
        TruncSeries(table, [0, 1, 0]).invert()


def test_order_errors(table, a, b):
    series = TruncSeries(table, [1, 2, 3])

    with pytest.raises(OrderError):
        series[3]

    with pytest.raises(OrderError):
        series.mul_z(1, 5)

    with pytest.raises(OrderError):
        base_element(4, a, b, 3)


def test_shift(table, q):
    series = shift_z_by_q_power(TruncSeries(table, [1, 1, 1]), 2)

    assert same(series, [1, q ** 2, q ** 4])


def test_mul_and_div_linear(table, a):
    series = TruncSeries.one(table, 4).mul_linear(a).div_linear(a)

    assert same(series, [1, 0, 0, 0, 0])


def test_base_element(table, q, a, b):
    element = base_element(1, a, b, 3)

    assert same(element, [0, 1, b - a, b * (b - a)])


def test_qhyper_binomial_theorem(table, q, a):
    # sum_n (a;q)_n/(q;q)_n z^n = (az;q)_oo / (z;q)_oo:
    one = RatFun.one(table)
    series = qhyper([a], [], one, 5)

    assert series.first_difference(pochhammer_infinite(a, 5) * inv_pochhammer_infinite(one, 5)) is None


def test_qhyper_vanishing_lower_parameter(table, q, a):
    with pytest.raises(PoleError):
        qhyper([a, a], [q ** -1], RatFun.one(table), 3)


def test_partial_theta(table, q):
    series = partial_theta(2, q, 2, 6)

    assert same(series, [1, 0, -q, 0, q ** 4, 0, -q ** 9])

    with pytest.raises(StructureError):
        partial_theta(0, q, 2, 6)


def test_substitute_and_embed(table, q, a):
    series = pochhammer_finite(a, 1, 2).substitute({"a": q})

    assert same(series, [1, -q, 0])
    assert series.to_json() == {"order": 2, "coeffs": ["1", "-q", "0"]}


def test_table_mismatch(table):
    from qexp.lib.coeffring import SymbolTable

    other = TruncSeries.one(SymbolTable(("q",)), 2)

    with pytest.raises(StructureError):
        TruncSeries.one(table, 2) + other
