import pytest

from qexp.lib.coeffring import SymbolTable


@pytest.fixture
def table():
    return SymbolTable(("q", "a", "b"))


@pytest.fixture
def q(table):
    return table.q


@pytest.fixture
def a(table):
    return table.gen("a")


@pytest.fixture
def b(table):
    return table.gen("b")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: checks at the full default truncation orders")
