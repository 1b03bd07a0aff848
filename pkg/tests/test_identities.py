import json

import pytest

from qexp.expansion.identities import (
    CooganOno,
    SERIES_IDENTITIES,
    check_coogan_ono,
    check_coogan_ono_shifted,
    check_expansion_transform,
    check_floor_sum,
    check_heine_4phi3,
    check_hyper_transform,
    check_partial_theta,
    check_ramanujan_1psi1_coeff,
    check_rogers_fine,
    compare,
    registered_names,
    run_all,
    run_check
)
from qexp.lib.coeffring import RatFun, SymbolTable
from qexp.lib.errors import StructureError
from qexp.lib.util import seeded_rng

ORDER = 4

# Default truncation order of the command line:
FULL_ORDER = 10

MATRIX_CHECKS = [
    "inverse_pair",
    "b_column_peel",
    "dual_path_coefficients",
    "dual_path_entries",
    "column_recurrence",
    "three_term_relation",
    "column_functional_equation",
    "finite_generating_function",
    "sn_vanishing",
    "homogeneity",
    "k_zero_identity",
    "gn_specialization",
    "carlitz",
    "b_zero",
    "b_eq_aq",
    "polynomial_bound",
    "rogers_fine_specializations"
]


def test_registry_holds_every_check():
    names = registered_names()

    assert set(SERIES_IDENTITIES) <= set(names)
    assert set(MATRIX_CHECKS) <= set(names)
    assert names == sorted(names)


@pytest.mark.parametrize("name", sorted(SERIES_IDENTITIES))
def test_series_identity_holds(name):
    report = run_check(name, ORDER)

    assert report.passed, report.to_text()
    assert report.compared == ORDER + 1
    assert report.first_failure is None


@pytest.mark.parametrize("name", MATRIX_CHECKS)
def test_matrix_check_holds(name):
    report = run_check(name, ORDER)

    assert report.passed, report.to_text()
    assert report.compared > 0


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SERIES_IDENTITIES))
def test_series_identity_holds_at_full_order(name):
    report = run_check(name, FULL_ORDER)

    assert report.passed, report.to_text()
    assert report.compared == FULL_ORDER + 1


@pytest.mark.slow
@pytest.mark.parametrize("name", MATRIX_CHECKS)
def test_matrix_check_holds_at_full_order(name):
    # The inverse pair is also checked two orders deeper:
    order = FULL_ORDER + 2 if name == "inverse_pair" else FULL_ORDER
    report = run_check(name, order)

    assert report.passed, report.to_text()


@pytest.mark.parametrize("check", [
    check_coogan_ono,
    check_coogan_ono_shifted,
    check_rogers_fine,
    check_heine_4phi3,
    check_partial_theta,
    check_ramanujan_1psi1_coeff,
    check_floor_sum
])
def test_named_checks(check):
    assert check(ORDER).passed


def test_partial_theta_at_higher_order():
    assert check_partial_theta(8).passed


def test_expansion_transform_with_custom_coefficients():
    report = check_expansion_transform([1, 2, 0, -3], ORDER)

    assert report.passed
    assert report.name == "transform"


def test_hyper_transform_with_a_lower_parameter():
    table = SymbolTable(("q", "a", "b", "A1", "A2", "B1", "c"))

    report = check_hyper_transform([table.gen("A1"), table.gen("A2")], [table.gen("B1")], table.gen("c"), 3)

    assert report.passed


def test_hyper_transform_arity():
    table = SymbolTable(("q", "a", "b", "c"))

    with pytest.raises(StructureError):
        check_hyper_transform([], [], table.gen("c"), 3)


@pytest.mark.parametrize("name", sorted(SERIES_IDENTITIES))
def test_perturbation_is_detected(name):
    identity = SERIES_IDENTITIES[name](seeded_rng(7, name))
    _, terms = identity.sides(ORDER)

    for index, term in enumerate(terms):
        expected = term.valuation()

        if expected is None:
            continue

        report = identity.check(ORDER, perturb=index)

        assert not report.passed
        assert report.first_failure.index == expected


def test_perturbation_out_of_range():
    with pytest.raises(StructureError):
        CooganOno().check(3, perturb=1)


def test_specialization_is_reported():
    report = run_check("rogers_fine", ORDER, specializations=[("a", "0"), ("y", "1")])

    assert report.passed
    assert report.to_json()["parameters"] == {"a": "0", "b": "b"}


def test_specialization_may_add_symbols():
    report = run_check("homogeneity", 3, specializations=[("b", "a*s")])

    assert report.passed
    assert report.to_json()["parameters"]["b"] == "a*s"


def test_compare_reports_first_failure(table):
    one = RatFun.one(table)
    zero = RatFun.zero(table)

    report = compare("example", [(None, one, one), ("second", one, zero), (None, zero, one)], 2)

    assert not report.passed
    assert report.compared == 2
    assert report.first_failure.index == 1
    assert report.first_failure.label == "second"
    assert "first failure at second" in report.to_text()


def test_unknown_check():
    with pytest.raises(StructureError):
        run_check("nosuch", ORDER)


def test_filters():
    assert registered_names("heine") == ["heine_4phi3", "heine_4phi3_diagonal", "heine_third"]
    assert registered_names("dual_path_*") == ["dual_path_coefficients", "dual_path_entries"]
    assert [report.name for report in run_all(3, "coogan")] == ["coogan_ono", "coogan_ono_shifted"]


def test_seeded_checks_are_reproducible():
    first = run_check("transform_random", 3, seed=3)
    second = run_check("transform_random", 3, seed=3)

    assert json.dumps(first.to_json(), sort_keys=True) == json.dumps(second.to_json(), sort_keys=True)
    assert first.passed


def test_hyper_transform_with_collapsing_upper_parameter():
    # A = q turns the 1phi0 into a geometric series:
    report = run_check("hyper_transform", 5, specializations=[("A", "q")])

    assert report.passed
    assert report.to_json()["parameters"]["A"] == "q"
