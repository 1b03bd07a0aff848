'''
Truncated power series in z over rational functions, together with the
q-Pochhammer, basic hypergeometric and partial theta constructors.
'''

from qexp.lib.coeffring import MultiPoly, RatFun
from qexp.lib.errors import NotInvertibleError, OrderError, PoleError, StructureError


def q_power(table, exponent):
    '''
    q^exponent as a RatFun, for any integer exponent.
    '''
    if exponent >= 0:
        return RatFun.from_poly(MultiPoly.gen(table, "q", exponent))

    return RatFun.from_poly(MultiPoly.gen(table, "q", -exponent)).reciprocal()


def _sum(table, values):
    total = RatFun.zero(table)

    for value in values:
        total = total + value

    return total


class TruncSeries:
    '''
    Power series c_0 + c_1 z + ... + c_N z^N; every coefficient beyond z^N is unknown.
    Binary operations between series of different order truncate to the smaller one.
    '''

    __slots__ = ("table", "coeffs")

    def __init__(self, table, coeffs):
        coeffs = tuple(RatFun.coerce(table, coeff) for coeff in coeffs)

        if not coeffs:
            raise OrderError("A series needs at least its constant coefficient")

        self.table = table
        self.coeffs = coeffs

    @classmethod
    def _wrap(cls, table, coeffs):
        series = cls.__new__(cls)
        series.table = table
        series.coeffs = tuple(coeffs)

        return series

    @classmethod
    def zero(cls, table, order):
        return cls._wrap(table, (RatFun.zero(table),) * (order + 1))

    @classmethod
    def one(cls, table, order):
        zero = RatFun.zero(table)

        return cls._wrap(table, (RatFun.one(table),) + (zero,) * order)

    @classmethod
    def constant(cls, value, order):
        zero = RatFun.zero(value.table)

        return cls._wrap(value.table, (value,) + (zero,) * order)

    @classmethod
    def monomial(cls, table, coeff, power, order):
        '''
        coeff * z^power, truncated at z^order.
        '''
        coeffs = [RatFun.zero(table)] * (order + 1)

        if power <= order:
            coeffs[power] = RatFun.coerce(table, coeff)

        return cls._wrap(table, coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, power):
        if power < 0 or power > self.order:
            raise OrderError("Coefficient of z^{} requested from a series of order {}".format(power, self.order))

        return self.coeffs[power]

    def truncate(self, order):
        if order > self.order:
            raise OrderError("Cannot extend a series of order {} to order {}".format(self.order, order))

        return TruncSeries._wrap(self.table, self.coeffs[:order + 1])

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.table != self.table:
                raise StructureError("Symbol tables differ: {} and {}".format(self.table, other.table))
            return other

        return RatFun.coerce(self.table, other)

    def __add__(self, other):
        other = self._coerce(other)

        if isinstance(other, RatFun):
            return TruncSeries._wrap(self.table, (self.coeffs[0] + other,) + self.coeffs[1:])

        order = min(self.order, other.order)

        return TruncSeries._wrap(self.table, [a + b for a, b in zip(self.coeffs[:order + 1], other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._wrap(self.table, [-coeff for coeff in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, value):
        value = RatFun.coerce(self.table, value)

        if value.is_zero():
            return TruncSeries.zero(self.table, self.order)

        return TruncSeries._wrap(self.table, [coeff * value for coeff in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)

        if isinstance(other, RatFun):
            return self.scalar_mul(other)

        order = min(self.order, other.order)
        right = [(power, coeff) for power, coeff in enumerate(other.coeffs[:order + 1]) if not coeff.is_zero()]
        products = [[] for _ in range(order + 1)]

        for i, left in enumerate(self.coeffs[:order + 1]):
            if left.is_zero():
                continue

            for j, coeff in right:
                if i + j > order:
                    break

                products[i + j].append(left * coeff)

        return TruncSeries._wrap(self.table, [_sum(self.table, values) for values in products])

    __rmul__ = __mul__

    def mul_linear(self, alpha):
        '''
        Multiply by (1 - alpha z).
        '''
        alpha = RatFun.coerce(self.table, alpha)

        if alpha.is_zero():
            return self

        coeffs = [self.coeffs[0]]

        for power in range(1, len(self.coeffs)):
            coeffs.append(self.coeffs[power] - alpha * self.coeffs[power - 1])

        return TruncSeries._wrap(self.table, coeffs)

    def div_linear(self, alpha):
        '''
        Divide by (1 - alpha z).
        '''
        alpha = RatFun.coerce(self.table, alpha)

        if alpha.is_zero():
            return self

        coeffs = [self.coeffs[0]]

        for power in range(1, len(self.coeffs)):
            coeffs.append(self.coeffs[power] + alpha * coeffs[-1])

        return TruncSeries._wrap(self.table, coeffs)

    def mul_z(self, power, order=None):
        '''
        Multiply by z^power; the result has the given order (default: unchanged).
        '''
        if order is None:
            order = self.order

        if order > self.order + power:
            raise OrderError("z^{} times a series of order {} is unknown beyond order {}".format(power, self.order, self.order + power))

        coeffs = (RatFun.zero(self.table),) * power + self.coeffs

        return TruncSeries._wrap(self.table, coeffs[:order + 1])

    def invert(self):
        lead = self.coeffs[0]

        if lead.is_zero():
            raise NotInvertibleError("Series with a vanishing constant term has no inverse")

        inverse = lead.reciprocal()
        coeffs = [inverse]

        for power in range(1, len(self.coeffs)):
            terms = [self.coeffs[j] * coeffs[power - j] for j in range(1, power + 1) if not self.coeffs[j].is_zero()]
            coeffs.append(-(_sum(self.table, terms) * inverse))

        return TruncSeries._wrap(self.table, coeffs)

    def shift(self, exponent):
        '''
        Substitute z -> z q^exponent.
        '''
        if exponent == 0:
            return self

        return TruncSeries._wrap(self.table, [coeff * q_power(self.table, exponent * power) for power, coeff in enumerate(self.coeffs)])

    def valuation(self):
        for power, coeff in enumerate(self.coeffs):
            if not coeff.is_zero():
                return power

        return None

    def first_difference(self, other):
        order = min(self.order, other.order)

        for power in range(order + 1):
            if not self.coeffs[power].equals(other.coeffs[power]):
                return power

        return None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented

        return self.order == other.order and self.first_difference(other) is None

    __hash__ = None

    def substitute(self, assignments):
        return TruncSeries._wrap(self.table, [coeff.substitute(assignments) for coeff in self.coeffs])

    def embed(self, table):
        if table == self.table:
            return self

        return TruncSeries._wrap(table, [coeff.embed(table) for coeff in self.coeffs])

    def to_json(self):
        return {
            "order": self.order,
            "coeffs": [coeff.render() for coeff in self.coeffs]
        }

    def __repr__(self):
        return "TruncSeries(order={}, coeffs=[{}])".format(self.order, ", ".join(coeff.render() for coeff in self.coeffs))


def series_arith(op, s, t=None):
    if op == "add":
        return s + t
    elif op == "sub":
        return s - t
    elif op == "mul":
        return s * t
    elif op == "neg":
        return -s
    elif op == "scalar_mul":
        return s.scalar_mul(t)
    else:
        raise ValueError("Invalid series operation: {}".format(op))


def series_invert(s):
    return s.invert()


def shift_z_by_q_power(s, k):
    return s.shift(k)


def param_pochhammer(c, n):
    '''
    (c;q)_n as a RatFun in the parameters, for any integer n.
    '''
    table = c.table
    result = RatFun.one(table)

    if n >= 0:
        for i in range(n):
            result = result * (1 - c * q_power(table, i))
    else:
        for j in range(1, -n + 1):
            factor = 1 - c * q_power(table, -j)

            if factor.is_zero():
                raise PoleError("({};q)_{} has a vanishing factor at j={}".format(c.render(), n, j))

            result = result / factor

    return result


def _apply_pochhammer(series, c, n, inverse):
    table = series.table

    if c.is_zero():
        return series

    if n >= 0:
        for i in range(n):
            alpha = c * q_power(table, i)
            series = series.div_linear(alpha) if inverse else series.mul_linear(alpha)
    else:
        # (cz;q)_{-m} = 1 / prod_{j=1..m} (1 - c z q^-j):
        for j in range(1, -n + 1):
            alpha = c * q_power(table, -j)
            series = series.mul_linear(alpha) if inverse else series.div_linear(alpha)

    return series


def pochhammer_ratio(table, uppers, lowers, order):
    '''
    prod (c z;q)_n over uppers divided by prod (c z;q)_n over lowers, each
    given as a (c, n) pair with n any integer.
    '''
    series = TruncSeries.one(table, order)

    if order == 0:
        return series

    for c, n in uppers:
        series = _apply_pochhammer(series, RatFun.coerce(table, c), n, False)

    for c, n in lowers:
        series = _apply_pochhammer(series, RatFun.coerce(table, c), n, True)

    return series


def pochhammer_finite(c, n, order):
    return pochhammer_ratio(c.table, [(c, n)], [], order)


def pochhammer_infinite(c, order):
    '''
    (cz;q)_oo from Euler's expansion: z^m has coefficient (-c)^m q^(m(m-1)/2) / (q;q)_m.
    '''
    table = c.table
    term = RatFun.one(table)
    coeffs = [term]

    for m in range(1, order + 1):
        term = term * (-c * q_power(table, m - 1)) / (1 - q_power(table, m))
        coeffs.append(term)

    return TruncSeries._wrap(table, coeffs)


def inv_pochhammer_infinite(c, order):
    '''
    1/(cz;q)_oo: z^m has coefficient c^m / (q;q)_m.
    '''
    table = c.table
    term = RatFun.one(table)
    coeffs = [term]

    for m in range(1, order + 1):
        term = term * c / (1 - q_power(table, m))
        coeffs.append(term)

    return TruncSeries._wrap(table, coeffs)


def base_ratio(n, a, b, order):
    '''
    (az;q)_n / (bz;q)_n truncated at z^order.
    '''
    return pochhammer_ratio(a.table, [(a, n)], [(b, n)], order)


def base_element(n, a, b, order):
    '''
    z^n (az;q)_n / (bz;q)_n truncated at z^order.
    '''
    if n < 0 or n > order:
        raise OrderError("Base element {} outside order {}".format(n, order))

    return base_ratio(n, a, b, order - n).mul_z(n, order)


def _table_of(*values):
    for value in values:
        if isinstance(value, RatFun):
            return value.table

    raise StructureError("No rational function among the parameters to fix a symbol table")


def qhyper(uppers, lowers, c, order):
    '''
    sum_n (A_1, ..., A_{r+1};q)_n / (q, B_1, ..., B_r;q)_n (cz)^n with the
    Pochhammers taken in the parameters.
    '''
    table = _table_of(c, *uppers, *lowers)
    uppers = [RatFun.coerce(table, value) for value in uppers]
    lowers = [RatFun.coerce(table, value) for value in lowers]
    c = RatFun.coerce(table, c)

    term = RatFun.one(table)
    coeffs = [term]

    for n in range(1, order + 1):
        shift = q_power(table, n - 1)
        step = c

        for upper in uppers:
            step = step * (1 - upper * shift)

        term = term * step

        for idx, lower in enumerate(lowers):
            factor = 1 - lower * shift

            if factor.is_zero():
                raise PoleError("Lower parameter {} ({}) vanishes the denominator at index {}".format(idx, lower.render(), n))

            term = term / factor

        term = term / (1 - q_power(table, n))
        coeffs.append(term)

    return TruncSeries._wrap(table, coeffs)


def partial_theta(baseexp, c, p, order):
    '''
    sum_k (-1)^k q^(baseexp k(k-1)/2) c^k z^(p k) for p k <= order.
    '''
    if baseexp < 1 or p < 1:
        raise StructureError("Invalid partial theta parameters: baseexp={}, p={}".format(baseexp, p))

    table = c.table
    coeffs = [RatFun.zero(table)] * (order + 1)
    power = RatFun.one(table)
    k = 0

    while p * k <= order:
        sign = -1 if k % 2 else 1
        coeffs[p * k] = power * q_power(table, baseexp * k * (k - 1) // 2) * sign
        power = power * c
        k += 1

    return TruncSeries._wrap(table, coeffs)
