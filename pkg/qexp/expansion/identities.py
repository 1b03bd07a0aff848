'''
Registry of symbolic identity checks.

Series identities are built as a left-hand side and a list of right-hand
terms, all truncated series in z, and compared coefficient by coefficient.
Matrix properties of the inverse pair are compared entry by entry. Every
check returns an IdentityReport naming the first discrepancy.
'''

import fnmatch

from ocrd_utils import getLogger
from tqdm import tqdm

from qexp.expansion.inversion import (
    CoefficientFormula,
    b_column1,
    bzero_coeffs,
    carlitz_coeffs,
    expand_closed_formula,
    generating_function_rhs,
    gn_polynomials,
    inverse_by_formula,
    inverse_pair,
    polynomial_coeffs,
    polynomial_series,
    shifted_base_coeffs,
    sn_polynomial,
    solve_lower
)
from qexp.lib.coeffring import RatFun, SymbolTable
from qexp.lib.errors import StructureError
from qexp.lib.series import (
    TruncSeries,
    base_element,
    base_ratio,
    inv_pochhammer_infinite,
    param_pochhammer,
    partial_theta,
    pochhammer_infinite,
    pochhammer_ratio,
    q_power,
    qhyper
)
from qexp.lib.struct import Discrepancy, IdentityReport, LTMatrix
from qexp.lib.util import parse_ratfun, random_rational, random_series, seeded_rng

log = getLogger("qexp.expansion.identities")

CHECKS = {}

SERIES_IDENTITIES = {}


def _specialize(pairs, specializations):
    table = pairs[0][1].table
    target = table
    parsed = []

    for name, text in specializations:
        # Only symbols this check knows about:
        if name not in table:
            continue

        value, target = parse_ratfun(text, target)
        parsed.append((name, value, text))

    if not parsed:
        return pairs, ()

    assignments = [(name, value.embed(target)) for name, value, _ in parsed]
    pairs = [(label, lhs.embed(target).substitute(assignments), rhs.embed(target).substitute(assignments)) for label, lhs, rhs in pairs]

    return pairs, tuple((name, text) for name, _, text in parsed)


def compare(name, pairs, order, parameters=(), specializations=()):
    '''
    Reports the first of the (label, lhs, rhs) triples whose sides differ,
    after applying the (name, literal) specializations.
    '''
    pairs = list(pairs)
    rendered = tuple((key, value.render() if isinstance(value, RatFun) else str(value)) for key, value in parameters)

    if pairs and specializations:
        pairs, applied = _specialize(pairs, specializations)
        rendered += applied

    for index, (label, lhs, rhs) in enumerate(pairs):
        if not lhs.equals(rhs):
            log.info("%s fails at position %i (%s)", name, index, label or "z^{}".format(index))
            return IdentityReport(name, rendered, order, False, index + 1, Discrepancy(index, lhs, rhs, label))

    log.info("%s holds on %i comparisons", name, len(pairs))

    return IdentityReport(name, rendered, order, True, len(pairs))


def _series_pairs(lhs, rhs, prefix=None):
    order = min(lhs.order, rhs.order)
    label = (lambda n: "{} z^{}".format(prefix, n)) if prefix else (lambda n: None)

    return [(label(n), lhs[n], rhs[n]) for n in range(order + 1)]


class SeriesIdentity:
    '''
    An identity lhs = sum of rhs terms between truncated series in z.
    '''

    name = None
    symbols = ("q",)
    log = getLogger("qexp.expansion.identities.SeriesIdentity")

    def __init__(self, table=None):
        '''
        Constructs the identity over its own symbol table unless one is given.
        '''

        self.table = table if table is not None else SymbolTable(self.symbols)

    def gen(self, name):
        return self.table.gen(name)

    def parameters(self):
        return ()

    def sides(self, order):
        '''
        Returns (lhs, [rhs terms]) truncated at z^order.
        '''

        raise NotImplementedError

    def check(self, order, perturb=None, specializations=()):
        '''
        Compares both sides; perturb=i multiplies the i-th rhs term by (1 + q).
        '''

        self.log.info("Checking %s to order %i", self.name, order)

        lhs, terms = self.sides(order)

        if perturb is not None:
            if not 0 <= perturb < len(terms):
                raise StructureError("{} has {} rhs terms, cannot perturb term {}".format(self.name, len(terms), perturb))

            terms = list(terms)
            terms[perturb] = terms[perturb].scalar_mul(1 + self.table.q)

        rhs = TruncSeries.zero(self.table, order)

        for term in terms:
            rhs = rhs + term

        return compare(self.name, _series_pairs(lhs, rhs), order, self.parameters(), specializations)


class CooganOno(SeriesIdentity):
    '''
    sum_n z^n (z;q)_n / (-z;q)_{n+1} = sum_n (-1)^n z^(2n) q^(n^2).
    '''

    name = "coogan_ono"

    def sides(self, order):
        table = self.table
        lhs = TruncSeries.zero(table, order)

        for n in range(order + 1):
            lhs = lhs + pochhammer_ratio(table, [(1, n)], [(-1, n + 1)], order - n).mul_z(n, order)

        return lhs, [partial_theta(2, table.q, 2, order)]


class CooganOnoShifted(SeriesIdentity):
    '''
    sum_n z^n (z;q)_{n+1} / (-zq;q)_n = 2 sum_n (-1)^n z^(2n) q^(n^2) - 1.
    '''

    name = "coogan_ono_shifted"

    def sides(self, order):
        table = self.table
        q = table.q
        lhs = TruncSeries.zero(table, order)

        for n in range(order + 1):
            lhs = lhs + pochhammer_ratio(table, [(1, n + 1)], [(-q, n)], order - n).mul_z(n, order)

        theta = partial_theta(2, q, 2, order)

        return lhs, [theta.scalar_mul(2), TruncSeries.constant(RatFun.from_int(table, -1), order)]


def rogers_fine_sides(table, order, a, b, ratio):
    '''
    Both sides of the Rogers-Fine identity

      (1 - z) sum_n z^n (aq;q)_n/(bq;q)_n
        = sum_n (aq;q)_n (azq/b;q)_n / ((bq;q)_n (zq;q)_n) (1 - azq^(2n+1)) (bz)^n q^(n^2)

    with a and b given as series in z (constants or not) and ratio = a/b
    given separately as a RatFun.
    '''
    one = TruncSeries.one(table, order)
    z = TruncSeries.monomial(table, 1, 1, order)

    upper = one
    lower = one
    zratio = one
    power = one

    az = a * z
    bz = b * z

    lhs = TruncSeries.zero(table, order)
    terms = []

    for n in range(order + 1):
        if n:
            shift = q_power(table, n)

            upper = upper * (one - a.scalar_mul(shift))
            lower = lower * (one - b.scalar_mul(shift)).invert()
            zratio = zratio.mul_linear(ratio * shift).div_linear(shift)
            power = power * bz

        weight = upper * lower
        lhs = lhs + weight.mul_z(n, order)

        factor = one - az.scalar_mul(q_power(table, 2 * n + 1))
        terms.append((factor * power * weight * zratio).scalar_mul(q_power(table, n * n)))

    return lhs.mul_linear(1), terms


class RogersFine(SeriesIdentity):
    name = "rogers_fine"
    symbols = ("q", "a", "b")

    def parameters(self):
        return (("a", "a"), ("b", "b"))

    def sides(self, order):
        a = self.gen("a")
        b = self.gen("b")

        return rogers_fine_sides(self.table, order, TruncSeries.constant(a, order), TruncSeries.constant(b, order), a / b)


def _transform_weights(a, b, order):
    '''
    (aq/b;q)_n / (q;q)_n b^n q^(n(n-1)) for n = 0 ... order.
    '''
    table = a.table
    weight = RatFun.one(table)
    weights = [weight]

    for n in range(1, order + 1):
        weight = weight * (b - a * q_power(table, n)) * q_power(table, 2 * n - 2) / (1 - q_power(table, n))
        weights.append(weight)

    return weights


def _transform_kernel(a, b, t, n, order):
    '''
    H_n(z) = sum_k t_k (zq^n)^k (azq^n, azq^(2n+1);q)_k / (bzq^n, azq^(2n);q)_k.
    '''
    table = a.table
    total = TruncSeries.zero(table, order)
    ratio = TruncSeries.one(table, order)

    for k in range(order + 1):
        if k:
            ratio = (
                ratio.mul_linear(a * q_power(table, n + k - 1))
                .mul_linear(a * q_power(table, 2 * n + k))
                .div_linear(b * q_power(table, n + k - 1))
                .div_linear(a * q_power(table, 2 * n + k - 1))
            )

        if not t[k].is_zero():
            total = total + ratio.mul_z(k, order).scalar_mul(t[k] * q_power(table, n * k))

    return total


class ExpansionTransform(SeriesIdentity):
    '''
    For G(z) = sum_k t_k z^k and Gt(z; a, b) = sum_k t_k z^k (az;q)_k/(bz;q)_k:

      (az;q)_oo / (bz;q)_oo G(z) = sum_n (aq/b, az;q)_n / (q, bz;q)_n (bz)^n q^(n(n-1))
                                   * (Gt(zq^n; a, b) - a z q^(2n) Gt(zq^(n+1); a/q, b/q))
    '''

    symbols = ("q", "a", "b")

    def __init__(self, name, coefficients, table=None, label=None):
        '''
        Constructs an instance; coefficients(table, order) returns t_0 ... t_order.
        '''

        super(ExpansionTransform, self).__init__(table)

        self.name = name
        self.coefficients = coefficients
        self.label = label or name

    def parameters(self):
        return (("G", self.label),)

    def sides(self, order):
        table = self.table
        a = self.gen("a")
        b = self.gen("b")
        q = table.q

        t = [RatFun.coerce(table, value) for value in self.coefficients(table, order)]
        t += [RatFun.zero(table)] * (order + 1 - len(t))

        G = TruncSeries(table, t[:order + 1])
        lhs = pochhammer_infinite(a, order) * inv_pochhammer_infinite(b, order) * G

        high = TruncSeries.zero(table, order)
        low = TruncSeries.zero(table, order)

        for k in range(order + 1):
            if not t[k].is_zero():
                high = high + base_element(k, a, b, order).scalar_mul(t[k])
                low = low + base_element(k, a / q, b / q, order).scalar_mul(t[k])

        terms = []

        for n, weight in enumerate(_transform_weights(a, b, order)):
            rest = order - n
            inner = high.shift(n) - low.shift(n + 1).scalar_mul(a * q_power(table, 2 * n)).mul_z(1)
            term = base_ratio(n, a, b, rest) * inner.truncate(rest)

            terms.append(term.mul_z(n, order).scalar_mul(weight))

        return lhs, terms


class HyperTransform(SeriesIdentity):
    '''
    (azq;q)_oo / (bz;q)_oo  r+1phi_r(A; B; q, cz)
      = sum_n (aq/b, az;q)_n / (q, bz;q)_n (bz)^n q^(n(n-1)) (1 - azq^(2n)) / (1 - az) H_n(z)

    where H_n is the r+3phi_r+2 series with the extra pairs
    azq^n, azq^(2n+1) over bzq^n, azq^(2n) and argument czq^n.
    '''

    name = "hyper_transform"

    def __init__(self, uppers, lowers, c, name=None):
        '''
        Constructs an instance from the parameters of the r+1phi_r series (RatFuns
        over a table that also holds q, a and b).
        '''

        super(HyperTransform, self).__init__(c.table)

        if name is not None:
            self.name = name

        self.uppers = [RatFun.coerce(self.table, value) for value in uppers]
        self.lowers = [RatFun.coerce(self.table, value) for value in lowers]
        self.c = c

    def parameters(self):
        return (
            ("uppers", ", ".join(value.render() for value in self.uppers)),
            ("lowers", ", ".join(value.render() for value in self.lowers)),
            ("c", self.c)
        )

    def sides(self, order):
        table = self.table
        a = self.gen("a")
        b = self.gen("b")
        q = table.q

        G = qhyper(self.uppers, self.lowers, self.c, order)
        lhs = pochhammer_infinite(a * q, order) * inv_pochhammer_infinite(b, order) * G

        terms = []

        for n, weight in enumerate(_transform_weights(a, b, order)):
            rest = order - n
            factor = TruncSeries.one(table, rest).mul_linear(a * q_power(table, 2 * n)).div_linear(a)
            kernel = _transform_kernel(a, b, G.coeffs, n, rest)

            terms.append((base_ratio(n, a, b, rest) * factor * kernel).mul_z(n, order).scalar_mul(weight))

        return lhs, terms


class Heine4phi3(SeriesIdentity):
    '''
    2phi1(A, B; C; q, z) = sum_n (ABq/C, ABz/C;q)_n / (q, z;q)_n z^n q^(n(n-1)) (1 - ABzq^(2n)/C)
        * 4phi3(ABzq^n/C, ABzq^(2n+1)/C, C/A, C/B; C, zq^n, ABzq^(2n)/C; q, ABzq^n/C)
    '''

    name = "heine_4phi3"
    symbols = ("q", "A", "B", "C")

    def __init__(self, diagonal=False):
        '''
        Constructs the identity; diagonal=True sets A = C.
        '''

        super(Heine4phi3, self).__init__()

        self.diagonal = diagonal

        if diagonal:
            self.name = "heine_4phi3_diagonal"

    def _parameters(self):
        A = self.gen("C") if self.diagonal else self.gen("A")

        return A, self.gen("B"), self.gen("C")

    def parameters(self):
        A, B, C = self._parameters()

        return (("A", A), ("B", B), ("C", C))

    def sides(self, order):
        table = self.table
        A, B, C = self._parameters()
        a = A * B / C
        one = RatFun.one(table)

        lhs = qhyper([A, B], [C], one, order)

        # 4phi3 coefficients, taken term by term:
        t = qhyper([C / A, C / B], [C], a, order).coeffs

        terms = []

        for n, weight in enumerate(_transform_weights(a, one, order)):
            rest = order - n
            factor = TruncSeries.one(table, rest).mul_linear(a * q_power(table, 2 * n))
            kernel = _transform_kernel(a, one, t, n, rest)

            terms.append((base_ratio(n, a, one, rest) * factor * kernel).mul_z(n, order).scalar_mul(weight))

        return lhs, terms


class HeineThird(SeriesIdentity):
    '''
    2phi1(A, B; C; q, z) = (ABz/C;q)_oo / (z;q)_oo 2phi1(C/A, C/B; C; q, ABz/C).
    '''

    name = "heine_third"
    symbols = ("q", "A", "B", "C")

    def sides(self, order):
        A = self.gen("A")
        B = self.gen("B")
        C = self.gen("C")
        one = RatFun.one(self.table)

        lhs = qhyper([A, B], [C], one, order)
        rhs = pochhammer_infinite(A * B / C, order) * inv_pochhammer_infinite(one, order) * qhyper([C / A, C / B], [C], A * B / C, order)

        return lhs, [rhs]


class PartialThetaIdentity(SeriesIdentity):
    '''
    (zq;q)_oo/(-zq;q)_oo + sum_n (-1, z;q)_n/(q, -zq;q)_n (-z)^n q^(n^2+n)
      = sum_n (-1, z;q)_n/(q, -zq;q)_n (1 + q^n + zq^n - zq^(2n)) (-z)^n q^(n^2) theta(z^2 q^(2n+1); q^2)
    '''

    name = "partial_theta"

    def sides(self, order):
        table = self.table
        q = table.q

        lhs = pochhammer_infinite(q, order) * inv_pochhammer_infinite(-q, order)
        terms = []

        # (-1;q)_n / (q;q)_n (-1)^n:
        weight = RatFun.one(table)

        for n in range(order + 1):
            if n:
                weight = -weight * (1 + q_power(table, n - 1)) / (1 - q_power(table, n))

            rest = order - n
            ratio = pochhammer_ratio(table, [(1, n)], [(-q, n)], rest)

            lhs = lhs + ratio.mul_z(n, order).scalar_mul(weight * q_power(table, n * n + n))

            factor = TruncSeries(table, [1 + q_power(table, n), q_power(table, n) - q_power(table, 2 * n)] + [0] * (rest - 1)) if rest else TruncSeries.constant(1 + q_power(table, n), 0)
            theta = partial_theta(2, q_power(table, 2 * n + 1), 2, rest)

            terms.append((ratio * factor * theta).mul_z(n, order).scalar_mul(weight * q_power(table, n * n)))

        return lhs, terms


class RamanujanCoefficients(SeriesIdentity):
    '''
    f(z) = sum_k z^k (aqz;q)_k/(bqz;q)_k, the one-sided part of the 1psi1 sum
    with (a, b) -> (aqz, bqz), has every coefficient equal to 1 in the base
    z^n (aqz;q)_n/(bqz;q)_n; the closed coefficient formula must recover them.
    '''

    name = "ramanujan_1psi1_coeff"
    symbols = ("q", "a", "b")

    def parameters(self):
        return (("a", "aq"), ("b", "bq"))

    def sides(self, order):
        table = self.table
        q = table.q
        a = self.gen("a") * q
        b = self.gen("b") * q

        f = TruncSeries.zero(table, order)

        for k in range(order + 1):
            f = f + base_element(k, a, b, order)

        result = expand_closed_formula(f, a, b)

        return TruncSeries(table, result.coeffs), [TruncSeries.monomial(table, 1, n, order) for n in range(order + 1)]


class FloorSum(SeriesIdentity):
    '''
    sum_k B[n, 2k](1, -q) (-1)^k q^(k^2) + sum_k B[n, 2k+1](1, -q) (-1)^k q^(k^2) = 1.
    '''

    name = "floor_sum"

    def sides(self, order):
        table = self.table
        q = table.q

        _, inverse = inverse_pair(RatFun.one(table), -q, order)
        values = []

        for n in range(order + 1):
            total = RatFun.zero(table)

            for k in range(n + 1):
                half = k // 2
                sign = -1 if half % 2 else 1
                total = total + inverse[n, k] * q_power(table, half * half) * sign

            values.append(total)

        return TruncSeries(table, values), [TruncSeries.monomial(table, 1, n, order) for n in range(order + 1)]


def _unit_coefficients(table, order):
    return [RatFun.one(table)]


def _binomial_coefficients(table, order):
    A = table.gen("A")
    B = table.gen("B")
    q = table.q

    return [param_pochhammer(A, k) / param_pochhammer(q, k) * B ** k for k in range(order + 1)]


def _random_coefficients(rng):
    def coefficients(table, order):
        return [random_rational(rng) for _ in range(order + 1)]

    return coefficients


def check_coogan_ono(order, perturb=None):
    return CooganOno().check(order, perturb)


def check_coogan_ono_shifted(order, perturb=None):
    return CooganOnoShifted().check(order, perturb)


def check_rogers_fine(order, perturb=None):
    return RogersFine().check(order, perturb)


def check_expansion_transform(t, order, table=None, perturb=None):
    '''
    Checks the transformation for G(z) = sum_k t_k z^k, t given as a list.
    '''
    if table is None:
        table = next((value.table for value in t if isinstance(value, RatFun)), SymbolTable(("q", "a", "b")))

    identity = ExpansionTransform("transform", lambda table, order: list(t), table=table, label="custom")

    return identity.check(order, perturb)


def check_hyper_transform(uppers, lowers, c, order, perturb=None):
    if len(uppers) != len(lowers) + 1:
        raise StructureError("An r+1phi_r series needs one more upper than lower parameter, got {} and {}".format(len(uppers), len(lowers)))

    return HyperTransform(uppers, lowers, c).check(order, perturb)


def check_heine_4phi3(order, perturb=None):
    return Heine4phi3().check(order, perturb)


def check_partial_theta(order, perturb=None):
    return PartialThetaIdentity().check(order, perturb)


def check_ramanujan_1psi1_coeff(order, perturb=None):
    return RamanujanCoefficients().check(order, perturb)


def check_floor_sum(order, perturb=None):
    return FloorSum().check(order, perturb)


def _hyper_transform_default(rng):
    table = SymbolTable(("q", "a", "b", "A", "c"))

    return HyperTransform([table.gen("A")], [], table.gen("c"))


SERIES_IDENTITIES.update({
    "coogan_ono": lambda rng: CooganOno(),
    "coogan_ono_shifted": lambda rng: CooganOnoShifted(),
    "rogers_fine": lambda rng: RogersFine(),
    "transform_unit": lambda rng: ExpansionTransform("transform_unit", _unit_coefficients, label="1"),
    "transform_3phi2": lambda rng: ExpansionTransform(
        "transform_3phi2",
        _binomial_coefficients,
        table=SymbolTable(("q", "a", "b", "A", "B")),
        label="(ABz;q)_oo/(Bz;q)_oo"
    ),
    "transform_random": lambda rng: ExpansionTransform("transform_random", _random_coefficients(rng), label="seeded"),
    "hyper_transform": _hyper_transform_default,
    "heine_4phi3": lambda rng: Heine4phi3(),
    "heine_4phi3_diagonal": lambda rng: Heine4phi3(diagonal=True),
    "heine_third": lambda rng: HeineThird(),
    "partial_theta": lambda rng: PartialThetaIdentity(),
    "ramanujan_1psi1_coeff": lambda rng: RamanujanCoefficients(),
    "floor_sum": lambda rng: FloorSum()
})


def _register_series(name, factory):
    def check(order, rng, specializations=()):
        return factory(rng).check(order, specializations=specializations)

    CHECKS[name] = check


for _name, _factory in SERIES_IDENTITIES.items():
    _register_series(_name, _factory)


def register(name):
    def decorator(function):
        CHECKS[name] = function
        return function

    return decorator


def _default_parameters(*extra):
    table = SymbolTable(("q", "a", "b") + extra)

    return table, table.gen("a"), table.gen("b")


@register("inverse_pair")
def check_inverse_pair(order, rng=None, specializations=()):
    table, a, b = _default_parameters()
    matrix, inverse = inverse_pair(a, b, order)
    identity = LTMatrix.identity(table, order)

    pairs = []

    for label, product in (("AB", matrix @ inverse), ("BA", inverse @ matrix)):
        for n in range(order + 1):
            for k in range(n + 1):
                pairs.append(("{}[{},{}]".format(label, n, k), product[n, k], identity[n, k]))

    return compare("inverse_pair", pairs, order, (("a", a), ("b", b)), specializations)


@register("b_column_peel")
def check_b_column_peel(order, rng=None, specializations=()):
    table, a, b = _default_parameters()
    _, inverse = inverse_pair(a, b, order)
    column = b_column1(a, b, order)

    pairs = [("B[{},1]".format(n), column[n], inverse[n, 1]) for n in range(1, order + 1)]

    return compare("b_column_peel", pairs, order, (("a", a), ("b", b)), specializations)


@register("dual_path_coefficients")
def check_dual_path_coefficients(order, rng, specializations=(), samples=25):
    table, a, b = _default_parameters()
    matrix, inverse = inverse_pair(a, b, order)
    formula = CoefficientFormula(a, b, order, column=inverse.column(1))

    pairs = []

    for sample in range(samples):
        F = random_series(rng, table, order)
        closed = formula.expand(F)
        solved = solve_lower(matrix, F.coeffs)

        pairs.extend(("F{} c_{}".format(sample, n), closed.coeffs[n], solved[n]) for n in range(order + 1))

    return compare("dual_path_coefficients", pairs, order, (("a", a), ("b", b), ("samples", samples)), specializations)


@register("dual_path_entries")
def check_dual_path_entries(order, rng=None, specializations=()):
    table, a, b = _default_parameters()
    _, inverse = inverse_pair(a, b, order)
    formula = inverse_by_formula(a, b, order)

    pairs = [("B[{},{}]".format(n, k), formula[n, k], inverse[n, k]) for n in range(order + 1) for k in range(n + 1)]

    return compare("dual_path_entries", pairs, order, (("a", a), ("b", b)), specializations)


@register("column_recurrence")
def check_column_recurrence(order, rng=None, specializations=()):
    '''
    B[n, k+1] + (b - a) sum_{i=k+2}^{n} b^(i-k-2) B[n, i] = q^(n-k-1) B[n-1, k].
    '''
    table, a, b = _default_parameters()
    _, inverse = inverse_pair(a, b, order)

    pairs = []

    for n in range(1, order + 1):
        for k in range(n):
            total = RatFun.zero(table)

            for i in range(k + 2, n + 1):
                total = total + b ** (i - k - 2) * inverse[n, i]

            lhs = inverse[n, k + 1] + (b - a) * total
            rhs = q_power(table, n - k - 1) * inverse[n - 1, k]

            pairs.append(("n={},k={}".format(n, k), lhs, rhs))

    return compare("column_recurrence", pairs, order, (("a", a), ("b", b)), specializations)


@register("three_term_relation")
def check_three_term_relation(order, rng=None, specializations=()):
    '''
    B[n, k] - a B[n, k+1] = q^(n-k) B[n-1, k-1] - b q^(n-k-1) B[n-1, k].
    '''
    table, a, b = _default_parameters()
    _, inverse = inverse_pair(a, b, order)

    pairs = []

    for n in range(1, order + 1):
        for k in range(1, n + 1):
            lhs = inverse[n, k] - a * inverse[n, k + 1]
            rhs = q_power(table, n - k) * inverse[n - 1, k - 1] - b * q_power(table, n - k - 1) * inverse[n - 1, k]

            pairs.append(("n={},k={}".format(n, k), lhs, rhs))

    return compare("three_term_relation", pairs, order, (("a", a), ("b", b)), specializations)


@register("column_functional_equation")
def check_column_functional_equation(order, rng=None, specializations=(), columns=6):
    '''
    G_k(z) - a G_{k+1}(z) = z q^(1-k) G_{k-1}(qz) - b z q^(-k) G_k(qz), G_k = sum_n B[n, k] z^n.
    '''
    table, a, b = _default_parameters()
    _, inverse = inverse_pair(a, b, order)

    def column(k):
        if k > order:
            return TruncSeries.zero(table, order)

        return inverse.column_series(k)

    pairs = []

    for k in range(1, min(columns, order) + 1):
        lhs = column(k) - column(k + 1).scalar_mul(a)
        rhs = column(k - 1).shift(1).mul_z(1).scalar_mul(q_power(table, 1 - k)) - column(k).shift(1).mul_z(1).scalar_mul(b * q_power(table, -k))

        pairs.extend(_series_pairs(lhs, rhs, "k={}".format(k)))

    return compare("column_functional_equation", pairs, order, (("a", a), ("b", b)), specializations)


@register("finite_generating_function")
def check_finite_generating_function(order, rng=None, specializations=(), rows=8):
    table, a, b = _default_parameters("y")
    y = table.gen("y")
    size = min(rows, order)
    _, inverse = inverse_pair(a, b, size)
    column = inverse.column(1)

    pairs = []

    for n in range(1, size + 1):
        lhs = RatFun.zero(table)

        for k in range(n + 1):
            lhs = lhs + inverse[n, k] * y ** k

        pairs.append(("n={}".format(n), lhs, generating_function_rhs(n, a, b, y, column)))

    return compare("finite_generating_function", pairs, order, (("a", a), ("b", b)), specializations)


@register("sn_vanishing")
def check_sn_vanishing(order, rng=None, specializations=(), rows=6):
    '''
    The numerator of S_n(y) vanishes at y = aq^k for 0 <= k < n.
    '''
    table, a, b = _default_parameters("y")
    y = table.gen("y")
    size = min(rows, order)
    column = b_column1(a, b, size)

    pairs = []

    for n in range(1, size + 1):
        numerator = RatFun.from_poly(sn_polynomial(n, a, b, y, column).num)

        for k in range(n):
            pairs.append(("n={},k={}".format(n, k), numerator.substitute({"y": a * q_power(table, k)}), RatFun.zero(table)))

    return compare("sn_vanishing", pairs, order, (("a", a), ("b", b)), specializations)


@register("homogeneity")
def check_homogeneity(order, rng=None, specializations=()):
    '''
    B[n, k](at, bt) = B[n, k](a, b) t^(n-k).
    '''
    table, a, b = _default_parameters("t")
    t = table.gen("t")
    _, inverse = inverse_pair(a, b, order)

    pairs = []

    for n in range(order + 1):
        for k in range(n + 1):
            scaled = inverse[n, k].substitute({"a": a * t, "b": b * t})
            pairs.append(("n={},k={}".format(n, k), scaled, inverse[n, k] * t ** (n - k)))

    return compare("homogeneity", pairs, order, (("a", a), ("b", b)), specializations)


@register("k_zero_identity")
def check_k_zero_identity(order, rng=None, specializations=()):
    '''
    [z^n] R_n = a sum_{i<n} B[n-i, 1] q^((n-i)i) [z^i] R_{i+1}, R_n = (bz;q)_{n-1}/(az;q)_n.
    '''
    table, a, b = _default_parameters()
    formula = CoefficientFormula(a, b, order)

    pairs = []

    for n in range(1, order + 1):
        total = RatFun.zero(table)

        for i in range(n):
            total = total + formula.column[n - i] * q_power(table, (n - i) * i) * formula.ratio(i + 1)[i]

        pairs.append(("n={}".format(n), formula.ratio(n)[n], a * total))

    return compare("k_zero_identity", pairs, order, (("a", a), ("b", b)), specializations)


@register("gn_specialization")
def check_gn_specialization(order, rng=None, specializations=()):
    '''
    B[n, 1](a, aq) = g_n(q) a^(n-1).
    '''
    table = SymbolTable(("q", "a"))
    a = table.gen("a")
    column = b_column1(a, a * table.q, order)
    g = gn_polynomials(order, table)

    pairs = [("n={}".format(n), column[n], g[n] * a ** (n - 1)) for n in range(1, order + 1)]

    return compare("gn_specialization", pairs, order, (("a", a), ("b", "aq")), specializations)


def _random_expansions(table, order, rng, samples, expand, a, b):
    matrix, _ = inverse_pair(a, b, order)
    pairs = []

    for sample in range(samples):
        F = random_series(rng, table, order)
        result = expand(F)
        solved = solve_lower(matrix, F.coeffs)

        pairs.extend(("F{} c_{}".format(sample, n), result.coeffs[n], solved[n]) for n in range(order + 1))

    return pairs


@register("carlitz")
def check_carlitz(order, rng, specializations=(), samples=5):
    table = SymbolTable(("q", "b"))
    b = table.gen("b")
    a = RatFun.zero(table)

    pairs = _random_expansions(table, order, rng, samples, lambda F: carlitz_coeffs(F, b), a, b)

    return compare("carlitz", pairs, order, (("a", a), ("b", b)), specializations)


@register("b_zero")
def check_b_zero(order, rng, specializations=(), samples=5):
    table = SymbolTable(("q", "a"))
    a = table.gen("a")
    b = RatFun.zero(table)

    pairs = _random_expansions(table, order, rng, samples, lambda F: bzero_coeffs(F, a), a, b)

    return compare("b_zero", pairs, order, (("a", a), ("b", b)), specializations)


@register("b_eq_aq")
def check_b_eq_aq(order, rng, specializations=(), samples=5):
    table = SymbolTable(("q", "a"))
    a = table.gen("a")
    b = a * table.q

    pairs = _random_expansions(table, order, rng, samples, lambda F: shifted_base_coeffs(F, a), a, b)

    return compare("b_eq_aq", pairs, order, (("a", a), ("b", b)), specializations)


@register("polynomial_bound")
def check_polynomial_bound(order, rng=None, specializations=()):
    '''
    The polynomial-F expansion summed up to min(m, n-1) agrees with the triangular solve at b = aq.
    '''
    table = SymbolTable(("q", "a", "t", "x"))
    a = table.gen("a")
    b = a * table.q
    matrix, _ = inverse_pair(a, b, order)

    pairs = []

    for ts in ([table.gen("t")], [table.gen("t"), table.gen("x")]):
        F = polynomial_series(ts, a, order)
        closed = polynomial_coeffs(ts, a, order)
        solved = solve_lower(matrix, F.coeffs)

        pairs.extend(("m={} c_{}".format(len(ts), n), closed.coeffs[n], solved[n]) for n in range(order + 1))

    return compare("polynomial_bound", pairs, order, (("a", a), ("b", b)), specializations)


@register("rogers_fine_specializations")
def check_rogers_fine_specializations(order, rng=None, specializations=()):
    '''
    Rogers-Fine at a = z/q, b = -z is (1 - z^2) times the Coogan-Ono identity;
    at a = z, b = -z it is the shifted Coogan-Ono identity.
    '''
    table = SymbolTable(("q",))
    q = table.q
    z = TruncSeries.monomial(table, 1, 1, order)

    def total(terms):
        result = TruncSeries.zero(table, order)

        for term in terms:
            result = result + term

        return result

    pairs = []

    lhs, terms = rogers_fine_sides(table, order, z.scalar_mul(q.reciprocal()), -z, -q.reciprocal())
    co_lhs, co_terms = CooganOno(table).sides(order)
    square = TruncSeries.one(table, order).mul_linear(1).mul_linear(-1)

    pairs.extend(_series_pairs(lhs, co_lhs * square, "a=z/q lhs"))
    pairs.extend(_series_pairs(total(terms), total(co_terms) * square, "a=z/q rhs"))

    lhs, terms = rogers_fine_sides(table, order, z, -z, RatFun.from_int(table, -1))
    shifted_lhs, shifted_terms = CooganOnoShifted(table).sides(order)

    pairs.extend(_series_pairs(lhs, shifted_lhs, "a=z lhs"))
    pairs.extend(_series_pairs(total(terms), total(shifted_terms), "a=z rhs"))

    return compare("rogers_fine_specializations", pairs, order, (("b", "-z"),), specializations)


def _matches(name, pattern):
    if pattern is None:
        return True

    if any(char in pattern for char in "*?["):
        return fnmatch.fnmatchcase(name, pattern)

    return pattern in name


def registered_names(pattern=None):
    return sorted(name for name in CHECKS if _matches(name, pattern))


def run_check(name, order, seed=7, specializations=()):
    if name not in CHECKS:
        raise StructureError("Unknown check: {} (registered: {})".format(name, ", ".join(sorted(CHECKS))))

    # Randomized inputs are fixed by (seed, name):
    return CHECKS[name](order, seeded_rng(seed, name), specializations=specializations)


def run_all(order, pattern=None, seed=7, specializations=(), progress=False):
    '''
    Runs every registered check whose name matches the pattern, in name order.
    '''
    names = registered_names(pattern)
    log.info("Running %i checks at order %i", len(names), order)

    reports = []

    for name in tqdm(names, desc="verify", unit="check", disable=not progress):
        reports.append(run_check(name, order, seed, specializations))

    return reports
