from fractions import Fraction

import mpmath
import pytest

from qexp.expansion.identities import SERIES_IDENTITIES, CooganOno
from qexp.expansion.numeric import (
    NUMERIC_IDENTITIES,
    check_finite_theta_sum,
    check_identity_numeric,
    qpoch_num,
    run_numeric,
    spot_check_series
)
from qexp.lib.coeffring import SymbolTable
from qexp.lib.errors import DomainError, StructureError
from qexp.lib.mp import Evaluator
from qexp.lib.series import TruncSeries, inv_pochhammer_infinite, pochhammer_infinite
from qexp.lib.util import seeded_rng

GRID = [(name, point) for name, identity in sorted(NUMERIC_IDENTITIES.items()) for point in identity.points]


def test_qpoch_edge_cases():
    assert qpoch_num(0, None, "0.5") == 1
    assert qpoch_num("0.3", 0, "0.5") == 1
    assert float(qpoch_num("0.3", 2, "0.5")) == pytest.approx(0.7 * 0.85)


def test_qpoch_against_log_sum():
    value = qpoch_num("1/2", None, "1/2", precision=128)

    with mpmath.workprec(192):
        expected = mpmath.exp(mpmath.fsum(mpmath.log(1 - mpmath.mpf(2) ** (-1 - i)) for i in range(400)))

        assert abs(mpmath.mpf(value) - expected) < mpmath.mpf("1e-35")


def test_qpoch_quotient():
    c, q = Fraction(3, 10), Fraction(3, 5)

    for n in range(6):
        product = qpoch_num(c, n, q) * qpoch_num(c * q ** n, None, q)

        assert abs(product - qpoch_num(c, None, q)) < mpmath.mpf("1e-30")


def test_qpoch_negative_index():
    evaluator = Evaluator()
    q = evaluator.number("1/2")

    # (c;q)_{-1} = 1/(1 - c/q):
    assert abs(evaluator.qpoch(evaluator.number("1/4"), -1, q) - 2) < mpmath.mpf("1e-30")


def test_qpoch_outside_unit_disk():
    with pytest.raises(DomainError):
        qpoch_num("0.5", None, "1.5")


@pytest.mark.parametrize("name,point", GRID)
def test_default_grid_passes(name, point):
    report = check_identity_numeric(name, point)

    assert report.passed, report.to_text()
    assert report.terms > 0


@pytest.mark.parametrize("name,point", GRID)
def test_verdict_stable_under_doubled_precision(name, point):
    assert check_identity_numeric(name, point, precision=256).status == check_identity_numeric(name, point).status


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("q", ["1/2", "1/3"])
def test_finite_theta_sum(m, q):
    assert check_finite_theta_sum(m, q).passed


def test_finite_theta_sum_needs_positive_m():
    with pytest.raises(DomainError):
        check_finite_theta_sum(0, "1/2")


def test_convergence_regions_are_enforced():
    with pytest.raises(DomainError):
        check_identity_numeric("rogers_fine", {"q": "0.1", "a": "0.3", "b": "0.5", "z": "1.5"})

    with pytest.raises(DomainError):
        check_identity_numeric("ramanujan_1psi1", {"q": "0.2", "a": "0.1", "b": "0.5", "z": "0.5"})

    with pytest.raises(DomainError):
        check_identity_numeric("coogan_ono", {"q": "1.2", "z": "0.5"})


def test_missing_symbol():
    with pytest.raises(DomainError):
        check_identity_numeric("coogan_ono", {"q": "0.3"})


def test_unknown_identity():
    with pytest.raises(StructureError):
        check_identity_numeric("nosuch", {"q": "0.3"})


def test_wrong_right_hand_side_fails():
    identity = NUMERIC_IDENTITIES["coogan_ono"]
    evaluator = Evaluator()
    values = identity.read_point(evaluator, {"q": "0.3", "z": "0.4"})

    assert abs(identity.lhs(evaluator, values) - identity.rhs(evaluator, values)) < evaluator.tolerance
    assert abs(identity.lhs(evaluator, values) - identity.rhs(evaluator, {"q": values["q"], "z": values["z"] / 2})) > evaluator.tolerance


def test_run_numeric_selects_identities():
    reports = run_numeric(["coogan_ono"], [{"q": "0.2", "z": "0.3"}])

    assert len(reports) == 1
    assert reports[0].to_json()["point"] == {"q": "0.2", "z": "0.3"}


def test_spot_check_product():
    table = SymbolTable(("q", "a"))
    series = pochhammer_infinite(table.gen("a"), 20)

    report = spot_check_series(series, {"a": "0.2", "q": "0.3", "z": "0.1"}, "qpoch_infinite")

    assert report.status == "passed"


def test_spot_check_inverse_product():
    table = SymbolTable(("q", "a"))
    series = inv_pochhammer_infinite(table.gen("a"), 24)

    report = spot_check_series(series, {"a": "0.3", "q": "0.5", "z": "0.1"}, "inv_qpoch_infinite")

    assert report.status == "passed"


def test_spot_check_constant():
    table = SymbolTable(("q",))

    assert spot_check_series(TruncSeries.one(table, 0), {"q": "0.5", "z": "0.3"}, "one").status == "passed"


def test_spot_check_near_radius_is_inconclusive():
    table = SymbolTable(("q",))
    geometric = TruncSeries.one(table, 5).div_linear(1)

    assert spot_check_series(geometric, {"q": "0.5", "z": "0.99"}, "one").status == "inconclusive"


def test_spot_check_wrong_closed_form_fails():
    table = SymbolTable(("q", "a"))
    series = pochhammer_infinite(table.gen("a"), 20)

    report = spot_check_series(series, {"a": "0.2", "q": "0.3", "z": "0.1"}, "one")

    assert report.status == "failed"


def test_spot_check_symbolic_side():
    # Both symbolic sides of the Coogan-Ono identity against its numeric right-hand side:
    lhs, terms = CooganOno().sides(16)
    point = {"q": "0.3", "z": "0.2"}

    assert spot_check_series(lhs, point, "coogan_ono.rhs", tol="1e-20").status == "passed"
    assert spot_check_series(terms[0], point, "coogan_ono.lhs", tol="1e-20").status == "passed"


def test_unknown_closed_form():
    table = SymbolTable(("q",))

    with pytest.raises(StructureError):
        spot_check_series(TruncSeries.one(table, 0), {"q": "0.5", "z": "0.3"}, "nosuch")


def test_product_tail_is_recorded():
    report = check_identity_numeric("transform_unit", {"q": "0.3", "a": "0.5", "b": "0.2", "z": "0.4"})

    assert 0 < float(report.product_tail) <= 1e-25
    assert report.to_json()["product_tail"] == report.product_tail


def test_sums_without_products_record_no_tail():
    assert float(check_identity_numeric("coogan_ono", {"q": "0.3", "z": "0.4"}).product_tail) == 0


def _random_point(rng, names):
    # Small |z| keeps the order-10 truncation far below the tolerance:
    point = {
        "q": Fraction(int(rng.integers(1, 6)), 10),
        "z": Fraction(int(rng.choice([-1, 1])), 200)
    }

    for name in names:
        if name not in point:
            point[name] = Fraction(int(rng.choice([-1, 1])) * int(rng.integers(1, 6)), 10)

    return {name: str(value) for name, value in point.items()}


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(set(SERIES_IDENTITIES) & set(NUMERIC_IDENTITIES)))
def test_symbolic_sides_match_numeric_sides(name):
    rng = seeded_rng(7, name)
    identity = SERIES_IDENTITIES[name](rng)
    lhs, terms = identity.sides(10)
    rhs = TruncSeries.zero(lhs.table, 10)

    for term in terms:
        rhs = rhs + term

    for _ in range(3):
        point = _random_point(rng, NUMERIC_IDENTITIES[name].symbols)

        for series, side in ((lhs, "lhs"), (rhs, "rhs")):
            report = spot_check_series(series, point, "{}.{}".format(name, side), tol="1e-20")

            assert report.passed, report.to_text()
