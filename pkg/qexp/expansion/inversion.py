'''
The base matrix A of the basis z^n (az;q)_n/(bz;q)_n, its inverse B, and
the coefficient formulas that read expansions off the first column of B.
'''

from dataclasses import dataclass, field
from functools import lru_cache

from ocrd_utils import getLogger

from qexp.lib.coeffring import RatFun, SymbolTable
from qexp.lib.errors import OrderError, SingularMatrixError
from qexp.lib.series import TruncSeries, base_element, param_pochhammer, pochhammer_finite, q_power
from qexp.lib.struct import ExpansionResult, LTMatrix

log = getLogger("qexp.expansion.inversion")

PAIR_CACHE_SIZE = 32


def _product_coeff(first, second, n):
    '''
    Coefficient of z^n in first * second.
    '''
    table = first.table
    total = RatFun.zero(table)

    for j in range(n + 1):
        left = first[j]

        if left.is_zero():
            continue

        right = second[n - j]

        if not right.is_zero():
            total = total + left * right

    return total


def base_matrix(a, b, order):
    '''
    A[n, k] = [z^(n-k)] (az;q)_k / (bz;q)_k for 0 <= k <= n <= order.
    '''
    log.info("Building base matrix of order %i", order)

    table = a.table
    ratio = TruncSeries.one(table, order)
    columns = []

    for k in range(order + 1):
        if k:
            shift = q_power(table, k - 1)
            ratio = ratio.mul_linear(a * shift).div_linear(b * shift)

        columns.append(ratio)

    return LTMatrix.from_function(table, order, lambda n, k: columns[k][n - k])


def lt_inverse(matrix):
    '''
    Inverse of a unit lower-triangular matrix by forward substitution, column by column.
    '''
    table = matrix.table
    order = matrix.order

    for n in range(order + 1):
        if not matrix[n, n].equals(1):
            raise SingularMatrixError("Diagonal entry ({0}, {0}) is {1}, expected 1".format(n, matrix[n, n].render()))

    log.info("Inverting matrix of order %i", order)

    zero = RatFun.zero(table)
    entries = [[zero] * (order + 1) for _ in range(order + 1)]

    for k in range(order + 1):
        entries[k][k] = RatFun.one(table)

        for n in range(k + 1, order + 1):
            total = zero

            for j in range(k, n):
                left = matrix[n, j]

                if not left.is_zero() and not entries[j][k].is_zero():
                    total = total + left * entries[j][k]

            entries[n][k] = -total

        log.debug("Column %i of %i done", k, order)

    return LTMatrix.from_function(table, order, lambda n, k: entries[n][k])


@dataclass(frozen=True)
class _PairKey:
    table: SymbolTable
    a_text: str
    b_text: str
    order: int
    a: RatFun = field(compare=False)
    b: RatFun = field(compare=False)


@lru_cache(maxsize=PAIR_CACHE_SIZE)
def _pair(key):
    matrix = base_matrix(key.a, key.b, key.order)

    return matrix, lt_inverse(matrix)


def inverse_pair(a, b, order):
    '''
    (A, B) for the given parameters, memoized on their rendering; the least
    recently used pairs are dropped once PAIR_CACHE_SIZE are held.
    '''
    return _pair(_PairKey(a.table, a.render(), b.render(), order, a, b))


def b_column1(a, b, order):
    '''
    B[n, 1] for n = 0 ... order (entry 0 is zero), by peeling base elements off
    the series z one coefficient at a time.
    '''
    table = a.table
    residual = TruncSeries.monomial(table, 1, 1, order)
    column = [RatFun.zero(table)]

    for n in range(1, order + 1):
        coeff = residual[n]
        column.append(coeff)

        if not coeff.is_zero():
            residual = residual - base_element(n, a, b, order).scalar_mul(coeff)

    return tuple(column)


def solve_lower(matrix, values):
    '''
    Forward solve of matrix * x = values for a unit lower-triangular matrix.
    '''
    solution = []

    for n, value in enumerate(values):
        for k, known in enumerate(solution):
            entry = matrix[n, k]

            if not entry.is_zero() and not known.is_zero():
                value = value - entry * known

        solution.append(value)

    return solution


def expand_triangular(F, a, b):
    '''
    Coefficients of F in the base by solving A c = F.
    '''
    matrix = base_matrix(a, b, F.order)

    return ExpansionResult(tuple(solve_lower(matrix, F.coeffs)), "triangular_solve")


class CoefficientFormula:
    '''
    Closed formulas for expansion coefficients and inverse-matrix entries in
    terms of the first column B[m, 1]:

      c_n = [z^n] F R_n - a sum_{k<n} B[n-k, 1] q^((n-k)k) [z^k] F R_{k+1}
      B[n, k] = [z^(n-k)] R_n - a sum_{i=k}^{n-1} B[n-i, 1] q^((n-i)i) [z^(i-k)] R_{i+1}

    with R_n = (bz;q)_{n-1} / (az;q)_n.
    '''

    log = getLogger("qexp.expansion.inversion.CoefficientFormula")

    def __init__(self, a, b, order, column=None):
        '''
        Constructs a CoefficientFormula object; the first column is peeled unless given.
        '''

        self.a = a
        self.b = b
        self.order = order
        self.table = a.table

        self.column = column if column is not None else b_column1(a, b, order)

        if len(self.column) <= order:
            raise OrderError("First column has {} entries, order {} needs {}".format(len(self.column), order, order + 1))

        self._ratios = []

    def ratio(self, n):
        '''
        R_n = (bz;q)_{n-1} / (az;q)_n, truncated at z^order.
        '''

        table = self.table

        # R_0 = (bz;q)_{-1} = 1/(1 - bz/q):
        if not self._ratios:
            self._ratios.append(pochhammer_finite(self.b, -1, self.order))

        while len(self._ratios) <= n:
            m = len(self._ratios)
            previous = self._ratios[-1]

            self._ratios.append(previous.mul_linear(self.b * q_power(table, m - 2)).div_linear(self.a * q_power(table, m - 1)))

        return self._ratios[n]

    def coefficient(self, F, n):
        table = self.table
        tail = RatFun.zero(table)

        for k in range(n):
            weight = self.column[n - k]

            if weight.is_zero():
                continue

            tail = tail + weight * q_power(table, (n - k) * k) * _product_coeff(F, self.ratio(k + 1), k)

        return _product_coeff(F, self.ratio(n), n) - self.a * tail

    def entry(self, n, k):
        table = self.table
        tail = RatFun.zero(table)

        for i in range(k, n):
            weight = self.column[n - i]

            if weight.is_zero():
                continue

            tail = tail + weight * q_power(table, (n - i) * i) * self.ratio(i + 1)[i - k]

        return self.ratio(n)[n - k] - self.a * tail

    def expand(self, F, method="closed_formula"):
        if F.order > self.order:
            raise OrderError("Series of order {} needs a formula of at least that order, got {}".format(F.order, self.order))

        self.log.info("Expanding series of order %i by the closed formula", F.order)

        return ExpansionResult(tuple(self.coefficient(F, n) for n in range(F.order + 1)), method)


def expand_closed_formula(F, a, b, column=None):
    return CoefficientFormula(a, b, F.order, column).expand(F)


def matrix_entry_formula(n, k, a, b, formula=None):
    if not 0 <= k <= n:
        raise OrderError("Entry ({}, {}) is not in the lower triangle".format(n, k))

    if formula is None:
        formula = CoefficientFormula(a, b, n)

    return formula.entry(n, k)


def inverse_by_formula(a, b, order):
    '''
    The whole inverse matrix from the closed entry formula.
    '''
    formula = CoefficientFormula(a, b, order)

    return LTMatrix.from_function(a.table, order, formula.entry)


def gn_polynomials(order, table=None):
    '''
    g_n(q) for n = 0 ... order (entry 0 is zero):
    g_1 = 1, g_n = 1 - sum_{i=1}^{n-1} g_{n-i} q^((n-i)i).
    '''
    if table is None:
        table = SymbolTable(("q",))

    values = [RatFun.zero(table), RatFun.one(table)]

    for n in range(2, order + 1):
        total = RatFun.one(table)

        for i in range(1, n):
            total = total - values[n - i] * q_power(table, (n - i) * i)

        values.append(total)

    return tuple(values[:order + 1])


def carlitz_coeffs(F, b):
    '''
    Expansion at a = 0: c_n = [z^n] F (bz;q)_{n-1}.
    '''
    table = b.table
    order = F.order
    product = pochhammer_finite(b, -1, order)
    coeffs = []

    for n in range(order + 1):
        if n:
            product = product.mul_linear(b * q_power(table, n - 2))

        coeffs.append(_product_coeff(F, product, n))

    return ExpansionResult(tuple(coeffs), "carlitz")


def bzero_coeffs(F, a):
    '''
    Expansion at b = 0, the closed formula with R_n = 1/(az;q)_n.
    '''
    return CoefficientFormula(a, RatFun.zero(a.table), F.order).expand(F, method="b_zero")


def _tails(F, a, n):
    '''
    [z^n] (F - F_k) / (1 - az) = sum_{j=k+1}^{n} F_j a^(n-j) for k = 0 ... n-1.
    '''
    tails = [RatFun.zero(a.table)] * n
    running = RatFun.zero(a.table)
    power = RatFun.one(a.table)

    for k in range(n - 1, -1, -1):
        running = running + F[k + 1] * power
        power = power * a
        tails[k] = running

    return tails


def shifted_base_coeffs(F, a):
    '''
    Expansion at b = aq: c_0 = F_0 and
    c_n = sum_{k=0}^{n-1} g_{n-k} q^((n-k)k) [z^n] (F - F_k)/(1 - az).
    '''
    table = a.table
    order = F.order
    g = gn_polynomials(order, table)
    coeffs = [F[0]]

    for n in range(1, order + 1):
        tails = _tails(F, a, n)
        total = RatFun.zero(table)

        for k in range(n):
            if not tails[k].is_zero():
                total = total + g[n - k] * q_power(table, (n - k) * k) * tails[k]

        coeffs.append(total)

    return ExpansionResult(tuple(coeffs), "b_eq_aq")


def polynomial_series(ts, a, order):
    '''
    F = (1 - az) prod_i (1 - t_i z) as a series of the given order.
    '''
    series = TruncSeries.one(a.table, order)

    for t in ts:
        series = series.mul_linear(t)

    return series.mul_linear(a)


def polynomial_coeffs(ts, a, order):
    '''
    Expansion at b = aq of F = (1 - az) prod_{i=1}^{m} (1 - t_i z):
    c_0 = 1, c_n = sum_{k=0}^{min(m, n-1)} g_{n-k} q^((n-k)k) [z^n] {prod_i (1 - t_i z) - F_k / (1 - az)}.
    '''
    table = a.table
    g = gn_polynomials(order, table)
    product = TruncSeries.one(table, order)

    for t in ts:
        product = product.mul_linear(t)

    F = product.mul_linear(a)
    coeffs = [RatFun.one(table)]

    for n in range(1, order + 1):
        total = RatFun.zero(table)

        for k in range(min(len(ts), n - 1) + 1):
            truncated = sum((F[j] * a ** (n - j) for j in range(k + 1)), RatFun.zero(table))
            total = total + g[n - k] * q_power(table, (n - k) * k) * (product[n] - truncated)

        coeffs.append(total)

    return ExpansionResult(tuple(coeffs), "polynomial")


def generating_function_rhs(n, a, b, y, column):
    '''
    Closed form of sum_k B[n, k] y^k:
    y^n (b/y;q)_{n-1}/(a/y;q)_n - a sum_{k<n} B[n-k, 1] q^((n-k)k) y^k (b/y;q)_k/(a/y;q)_{k+1}.
    '''
    table = a.table
    b_over_y = b / y
    a_over_y = a / y

    head = param_pochhammer(b_over_y, n - 1) / param_pochhammer(a_over_y, n) * y ** n
    tail = RatFun.zero(table)

    for k in range(n):
        weight = column[n - k]

        if weight.is_zero():
            continue

        tail = tail + weight * q_power(table, (n - k) * k) * y ** k * param_pochhammer(b_over_y, k) / param_pochhammer(a_over_y, k + 1)

    return head - a * tail


def sn_polynomial(n, a, b, y, column=None):
    '''
    S_n(y) = prod_{k<n} (y - a q^k) times the closed form of sum_k B[n, k] y^k.
    '''
    table = a.table

    if column is None:
        column = b_column1(a, b, n)

    result = generating_function_rhs(n, a, b, y, column)

    for k in range(n):
        result = result * (y - a * q_power(table, k))

    return result
