from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from qexp.lib.coeffring import RatFun
from qexp.lib.errors import OrderError, StructureError
from qexp.lib.series import TruncSeries, base_element


class LTMatrix:
    '''
    Represents a square lower-triangular matrix of rational functions with rows
    and columns indexed 0 ... order.
    '''

    def __init__(self, table, entries):
        '''
        Constructs a LTMatrix object from a square numpy object array.
        '''

        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise StructureError("Matrix entries must form a square array, got shape {}".format(entries.shape))

        self.table = table
        self.entries = entries

    @classmethod
    def from_function(cls, table, order, entry):
        '''
        Constructs a LTMatrix object by calling entry(n, k) for every 0 <= k <= n <= order.
        '''

        size = order + 1

        entries = np.empty((size, size), dtype=object)
        entries.fill(RatFun.zero(table))

        for n in range(size):
            for k in range(n + 1):
                entries[n, k] = entry(n, k)

        return cls(table, entries)

    @classmethod
    def identity(cls, table, order):
        one = RatFun.one(table)
        zero = RatFun.zero(table)

        return cls.from_function(table, order, lambda n, k: one if n == k else zero)

    @property
    def order(self):
        return self.entries.shape[0] - 1

    def __getitem__(self, index):
        n, k = index

        if n < 0 or k < 0 or n > self.order:
            raise OrderError("Entry ({}, {}) outside a matrix of order {}".format(n, k, self.order))

        # Above the diagonal:
        if k > n:
            return RatFun.zero(self.table)

        return self.entries[n, k]

    def row(self, n):
        return [self[n, k] for k in range(n + 1)]

    def column(self, k):
        return [self[n, k] for n in range(self.order + 1)]

    def column_series(self, k):
        '''
        Column k as the power series sum_n M[n, k] z^n.
        '''

        return TruncSeries(self.table, self.column(k))

    def __matmul__(self, other):
        if self.order != other.order:
            raise StructureError("Matrix orders differ: {} and {}".format(self.order, other.order))

        return LTMatrix(self.table, self.entries.dot(other.entries))

    def first_mismatch(self, other):
        '''
        First (n, k) in row-major order where the matrices differ, or None.
        '''

        for n in range(min(self.order, other.order) + 1):
            for k in range(n + 1):
                if not self[n, k].equals(other[n, k]):
                    return n, k

        return None

    def has_unit_diagonal(self):
        return all(self[n, n].equals(1) for n in range(self.order + 1))

    def to_json(self):
        return {
            "n": self.order,
            "entries": [[entry.render() for entry in self.row(n)] for n in range(self.order + 1)]
        }

    def render_rows(self):
        return ["[{}] {}".format(n, "; ".join(entry.render() for entry in self.row(n))) for n in range(self.order + 1)]


@dataclass(frozen=True, eq=False)
class ExpansionResult:
    '''
    Coefficients c_0 ... c_N of F in the basis z^n (az;q)_n/(bz;q)_n, tagged
    with the method that produced them.
    '''

    coeffs: Tuple[RatFun, ...]
    method: str

    @property
    def order(self):
        return len(self.coeffs) - 1

    def first_difference(self, other):
        for n, (left, right) in enumerate(zip(self.coeffs, other.coeffs)):
            if not left.equals(right):
                return n

        return None

    def reconstruct(self, a, b):
        '''
        Rebuilds F = sum_n c_n z^n (az;q)_n/(bz;q)_n as a series of the same order.
        '''

        series = TruncSeries.zero(a.table, self.order)

        for n, coeff in enumerate(self.coeffs):
            if not coeff.is_zero():
                series = series + base_element(n, a, b, self.order).scalar_mul(coeff)

        return series

    def to_json(self):
        return {
            "method": self.method,
            "coeffs": [coeff.render() for coeff in self.coeffs]
        }


@dataclass(frozen=True, eq=False)
class Discrepancy:
    '''
    First coefficient where two sides of an identity differ.
    '''

    index: int
    lhs: RatFun
    rhs: RatFun
    label: Optional[str] = None

    def to_json(self):
        return {
            "index": self.index,
            "label": self.label,
            "lhs": self.lhs.render(),
            "rhs": self.rhs.render()
        }


@dataclass(frozen=True, eq=False)
class IdentityReport:
    name: str
    parameters: Tuple[Tuple[str, str], ...]
    order: int
    passed: bool
    compared: int
    first_failure: Optional[Discrepancy] = None

    def to_json(self):
        return {
            "name": self.name,
            "order": self.order,
            "parameters": dict(self.parameters),
            "passed": self.passed,
            "compared": self.compared,
            "first_failure": self.first_failure.to_json() if self.first_failure else None
        }

    def to_text(self):
        status = "PASS" if self.passed else "FAIL"
        line = "{} {} (N={}, {} coefficients)".format(status, self.name, self.order, self.compared)

        if self.first_failure is not None:
            failure = self.first_failure
            where = failure.label or "z^{}".format(failure.index)
            line += "\n    first failure at {}: lhs={} rhs={}".format(where, failure.lhs.render(), failure.rhs.render())

        return line


@dataclass(frozen=True)
class NumericReport:
    name: str
    point: Tuple[Tuple[str, str], ...]
    lhs: str
    rhs: str
    abs_diff: str
    tolerance: str
    precision: int
    status: str
    terms: int
    product_tail: str = "0"

    @property
    def passed(self):
        return self.status == "passed"

    def to_json(self):
        return {
            "name": self.name,
            "point": dict(self.point),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "tolerance": self.tolerance,
            "precision": self.precision,
            "status": self.status,
            "passed": self.passed,
            "terms": self.terms,
            "product_tail": self.product_tail
        }

    def to_text(self):
        point = ", ".join("{}={}".format(name, value) for name, value in self.point)

        return "{} {} at {}: |lhs - rhs| = {} (tol {}, {} terms)".format(
            self.status.upper(),
            self.name,
            point,
            self.abs_diff,
            self.tolerance,
            self.terms
        )
