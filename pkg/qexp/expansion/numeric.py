'''
Arbitrary-precision corroboration of the analytic identities at points
inside their convergence regions, and of truncated series against closed
forms.
'''

import math

from fractions import Fraction

from ocrd_utils import getLogger

from qexp.lib.errors import DomainError, PoleError, StructureError
from qexp.lib.mp import Evaluator
from qexp.lib.struct import NumericReport

log = getLogger("qexp.expansion.numeric")

NUMERIC_IDENTITIES = {}


def register(cls):
    NUMERIC_IDENTITIES[cls.name] = cls()
    return cls


def qpoch_num(c, n, q, precision=128):
    '''
    (c;q)_n at the given precision; n = None (or infinity) gives the infinite product.
    '''
    evaluator = Evaluator(precision)

    if n is not None and math.isinf(n):
        n = None

    c, q = evaluator.number(c), evaluator.number(q)

    if n is not None:
        return evaluator.qpoch(c, n, q)

    value, tail, count = evaluator.qpoch_infinite(c, q)

    log.debug("(c;q)_oo with %i factors, |log| of the omitted ones <= %s", count, evaluator.render(tail, 5))

    return value


def _nonzero(value, what):
    if value == 0:
        raise PoleError("{} vanishes".format(what))

    return value


class NumericIdentity:
    '''
    Both sides of an identity as independent numeric sums.
    '''

    name = None
    symbols = ()
    points = ()
    log = getLogger("qexp.expansion.numeric.NumericIdentity")

    def read_point(self, evaluator, point):
        missing = [name for name in self.symbols if name not in point]

        if missing:
            raise DomainError("Point for {} lacks {}".format(self.name, ", ".join(missing)))

        return {name: evaluator.number(point[name]) for name in self.symbols}

    def check_region(self, evaluator, values):
        q = values["q"]

        if abs(q) >= 1:
            raise DomainError("{} needs |q| < 1, got q={}".format(self.name, evaluator.render(q)))

    def lhs(self, evaluator, values):
        raise NotImplementedError

    def rhs(self, evaluator, values):
        raise NotImplementedError


def _unit_disk(identity, evaluator, values, name="z"):
    if abs(values[name]) >= 1:
        raise DomainError("{} needs |{}| < 1, got {}".format(identity.name, name, evaluator.render(values[name])))


@register
class RogersFineNumeric(NumericIdentity):
    name = "rogers_fine"
    symbols = ("q", "a", "b", "z")
    points = (
        {"q": "0.1", "a": "0.3", "b": "0.5", "z": "0.2"},
        {"q": "0.3", "a": "-0.4", "b": "0.2", "z": "0.5"},
        {"q": "0.5", "a": "0.7", "b": "-0.6", "z": "-0.3"}
    )

    def check_region(self, evaluator, values):
        super(RogersFineNumeric, self).check_region(evaluator, values)
        _unit_disk(self, evaluator, values)

        if abs(values["b"] * values["q"]) >= 1:
            raise DomainError("rogers_fine needs |bq| < 1, got {}".format(evaluator.render(values["b"] * values["q"])))

    def lhs(self, evaluator, values):
        q, a, b, z = (values[name] for name in self.symbols)

        def terms():
            term = evaluator.ctx.mpf(1)
            n = 0

            while True:
                yield term

                n += 1
                term = term * (1 - a * q ** n) / (1 - b * q ** n) * z

        return (1 - z) * evaluator.sum_terms(terms(), "rogers_fine lhs")

    def rhs(self, evaluator, values):
        q, a, b, z = (values[name] for name in self.symbols)

        def terms():
            # (aq;q)_n / ((bq;q)_n (zq;q)_n) prod_{i<n} (b - azq^(i+1)) z^n:
            weight = evaluator.ctx.mpf(1)
            n = 0

            while True:
                yield weight * (1 - a * z * q ** (2 * n + 1)) * q ** (n * n)

                n += 1
                weight = weight * (1 - a * q ** n) * (b - a * z * q ** n) * z / ((1 - b * q ** n) * (1 - z * q ** n))

        return evaluator.sum_terms(terms(), "rogers_fine rhs")


@register
class CooganOnoNumeric(NumericIdentity):
    name = "coogan_ono"
    symbols = ("q", "z")
    points = (
        {"q": "0.3", "z": "0.4"},
        {"q": "0.1", "z": "0.2"},
        {"q": "0.5", "z": "-0.6"}
    )

    def check_region(self, evaluator, values):
        super(CooganOnoNumeric, self).check_region(evaluator, values)
        _unit_disk(self, evaluator, values)

    def lhs(self, evaluator, values):
        q, z = values["q"], values["z"]

        def terms():
            # z^n (z;q)_n / (-z;q)_{n+1}:
            term = 1 / (1 + z)
            n = 0

            while True:
                yield term

                n += 1
                term = term * z * (1 - z * q ** (n - 1)) / (1 + z * q ** n)

        return evaluator.sum_terms(terms(), "coogan_ono lhs")

    def rhs(self, evaluator, values):
        q, z = values["q"], values["z"]

        return evaluator.theta(z * z * q, q * q)


@register
class CooganOnoShiftedNumeric(CooganOnoNumeric):
    name = "coogan_ono_shifted"

    def lhs(self, evaluator, values):
        q, z = values["q"], values["z"]

        def terms():
            # z^n (z;q)_{n+1} / (-zq;q)_n:
            term = 1 - z
            n = 0

            while True:
                yield term

                n += 1
                term = term * z * (1 - z * q ** n) / (1 + z * q ** n)

        return evaluator.sum_terms(terms(), "coogan_ono_shifted lhs")

    def rhs(self, evaluator, values):
        return 2 * super(CooganOnoShiftedNumeric, self).rhs(evaluator, values) - 1


@register
class RamanujanNumeric(NumericIdentity):
    '''
    sum_{k in Z} (a;q)_k/(b;q)_k z^k = (az, q/(az), q, b/a;q)_oo / (z, b/(az), b, q/a;q)_oo
    for |b/a| < |z| < 1, with the sum split at k = 0.
    '''

    name = "ramanujan_1psi1"
    symbols = ("q", "a", "b", "z")
    points = (
        {"q": "0.2", "a": "2", "b": "0.1", "z": "0.5"},
        {"q": "0.3", "a": "1.5", "b": "0.2", "z": "0.6"},
        {"q": "0.5", "a": "-2.5", "b": "0.3", "z": "-0.4"}
    )

    def check_region(self, evaluator, values):
        super(RamanujanNumeric, self).check_region(evaluator, values)
        _unit_disk(self, evaluator, values)

        a, b, z = values["a"], values["b"], values["z"]

        if a == 0 or not abs(b / a) < abs(z):
            raise DomainError("ramanujan_1psi1 needs |b/a| < |z|, got b/a={} and z={}".format(
                evaluator.render(b / a) if a != 0 else "inf",
                evaluator.render(z)
            ))

    def lhs(self, evaluator, values):
        q, a, b, z = (values[name] for name in self.symbols)

        def forward():
            term = evaluator.ctx.mpf(1)
            k = 0

            while True:
                yield term

                term = term * (1 - a * q ** k) / _nonzero(1 - b * q ** k, "(b;q)_{}".format(k + 1)) * z
                k += 1

        def backward():
            # (a;q)_{-m} / (b;q)_{-m} = prod_{j<=m} (1 - b q^-j) / (1 - a q^-j):
            term = evaluator.ctx.mpf(1)
            m = 0

            while True:
                m += 1
                term = term * (1 - b / q ** m) / _nonzero(1 - a / q ** m, "(a;q)_{}".format(-m)) / z

                yield term

        return evaluator.sum_terms(forward(), "1psi1 k >= 0") + evaluator.sum_terms(backward(), "1psi1 k < 0")

    def rhs(self, evaluator, values):
        q, a, b, z = (values[name] for name in self.symbols)

        def product(c):
            return evaluator.qpoch_infinite(c, q)[0]

        numerator = product(a * z) * product(q / (a * z)) * product(q) * product(b / a)
        denominator = product(z) * product(b / (a * z)) * product(b) * product(q / a)

        return numerator / _nonzero(denominator, "1psi1 product denominator")


@register
class PartialThetaNumeric(NumericIdentity):
    name = "partial_theta"
    symbols = ("q", "z")
    points = (
        {"q": "0.3", "z": "0.4"},
        {"q": "0.2", "z": "-0.5"},
        {"q": "0.5", "z": "0.7"}
    )

    def check_region(self, evaluator, values):
        super(PartialThetaNumeric, self).check_region(evaluator, values)
        _unit_disk(self, evaluator, values)

    def _weights(self, evaluator, values):
        '''
        (-1, z;q)_n / (q, -zq;q)_n (-z)^n for n = 0, 1, ...
        '''

        q, z = values["q"], values["z"]
        weight = evaluator.ctx.mpf(1)
        n = 0

        while True:
            yield n, weight

            n += 1
            weight = weight * (1 + q ** (n - 1)) * (1 - z * q ** (n - 1)) * (-z) / ((1 - q ** n) * (1 + z * q ** n))

    def lhs(self, evaluator, values):
        q, z = values["q"], values["z"]
        head = evaluator.qpoch_infinite(z * q, q)[0] / evaluator.qpoch_infinite(-z * q, q)[0]

        terms = (weight * q ** (n * n + n) for n, weight in self._weights(evaluator, values))

        return head + evaluator.sum_terms(terms, "partial_theta lhs")

    def rhs(self, evaluator, values):
        q, z = values["q"], values["z"]

        def terms():
            for n, weight in self._weights(evaluator, values):
                factor = 1 + q ** n + z * q ** n - z * q ** (2 * n)
                yield weight * factor * q ** (n * n) * evaluator.theta(z * z * q ** (2 * n + 1), q * q)

        return evaluator.sum_terms(terms(), "partial_theta rhs")


@register
class TransformUnitNumeric(NumericIdentity):
    '''
    (az;q)_oo / (bz;q)_oo = sum_n (aq/b, az;q)_n / (q, bz;q)_n (bz)^n q^(n(n-1)) (1 - azq^(2n)).
    '''

    name = "transform_unit"
    symbols = ("q", "a", "b", "z")
    points = (
        {"q": "0.3", "a": "0.5", "b": "0.2", "z": "0.4"},
        {"q": "0.1", "a": "-0.7", "b": "0.6", "z": "0.3"},
        {"q": "0.5", "a": "0.25", "b": "-0.5", "z": "-0.6"}
    )

    def check_region(self, evaluator, values):
        super(TransformUnitNumeric, self).check_region(evaluator, values)
        _unit_disk(self, evaluator, values)

        if abs(values["b"] * values["z"]) >= 1:
            raise DomainError("transform_unit needs |bz| < 1")

    def lhs(self, evaluator, values):
        q, a, b, z = (values[name] for name in self.symbols)

        return evaluator.qpoch_infinite(a * z, q)[0] / evaluator.qpoch_infinite(b * z, q)[0]

    def rhs(self, evaluator, values):
        q, a, b, z = (values[name] for name in self.symbols)

        def terms():
            # prod_{i<n} (b - aq^(i+1)) / (q;q)_n (az;q)_n / (bz;q)_n z^n:
            weight = evaluator.ctx.mpf(1)
            n = 0

            while True:
                yield weight * q ** (n * (n - 1)) * (1 - a * z * q ** (2 * n))

                n += 1
                weight = weight * (b - a * q ** n) * (1 - a * z * q ** (n - 1)) * z / ((1 - q ** n) * (1 - b * z * q ** (n - 1)))

        return evaluator.sum_terms(terms(), "transform_unit rhs")


@register
class FiniteThetaSum(NumericIdentity):
    '''
    The partial theta identity at z = q^-m, where both sides become finite
    sums over n = 0 ... m with q-binomial weights.
    '''

    name = "finite_theta_sum"
    symbols = ("m", "q")
    points = tuple({"m": str(m), "q": q} for m in (1, 2, 3) for q in ("1/2", "1/3"))

    def read_point(self, evaluator, point):
        values = super(FiniteThetaSum, self).read_point(evaluator, point)

        try:
            m = int(Fraction(str(point["m"])))
        except (ValueError, ZeroDivisionError):
            raise DomainError("finite_theta_sum needs an integer m, got {!r}".format(point["m"]))

        if Fraction(str(point["m"])) != m or m < 1:
            raise DomainError("finite_theta_sum needs an integer m >= 1, got {!r}".format(point["m"]))

        values["m"] = m

        return values

    def check_region(self, evaluator, values):
        q = values["q"]

        if evaluator.ctx.im(q) != 0 or not 0 < evaluator.ctx.re(q) < 1:
            raise DomainError("finite_theta_sum needs 0 < q < 1, got q={}".format(evaluator.render(q)))

    def _prefactor(self, evaluator, m, q, n):
        return evaluator.qpoch(-1, n, q) / evaluator.qpoch(-q ** (1 - m), n, q) * evaluator.qbinomial(m, n, q)

    def lhs(self, evaluator, values):
        m, q = values["m"], values["q"]
        total = evaluator.ctx.mpf(0)

        for n in range(m + 1):
            total += self._prefactor(evaluator, m, q, n) * q ** ((3 * n * n + n) // 2 - 2 * n * m)

        return total

    def rhs(self, evaluator, values):
        m, q = values["m"], values["q"]
        total = evaluator.ctx.mpf(0)

        for n in range(m + 1):
            factor = 1 + q ** n + q ** (n - m) - q ** (2 * n - m)
            theta = evaluator.theta(q ** (2 * n - 2 * m + 1), q * q)
            total += self._prefactor(evaluator, m, q, n) * q ** ((3 * n * n - n) // 2 - 2 * n * m) * factor * theta

        return total


def _identity(name):
    if name not in NUMERIC_IDENTITIES:
        raise StructureError("Unknown numeric identity: {} (registered: {})".format(name, ", ".join(sorted(NUMERIC_IDENTITIES))))

    return NUMERIC_IDENTITIES[name]


def check_identity_numeric(name, point, tol="1e-25", precision=128):
    '''
    Evaluates both sides of the named identity at the point, each in its own
    summation, inside a fresh evaluator of the given precision.
    '''
    identity = _identity(name)
    evaluator = Evaluator(precision, tol)

    values = identity.read_point(evaluator, point)
    identity.check_region(evaluator, values)

    lhs = identity.lhs(evaluator, values)
    rhs = identity.rhs(evaluator, values)
    diff = abs(lhs - rhs)

    status = "passed" if diff <= evaluator.tolerance else "failed"

    log.info("%s at %s: %s", name, point, status)

    return NumericReport(
        name,
        tuple((symbol, str(point[symbol])) for symbol in identity.symbols),
        evaluator.render(lhs),
        evaluator.render(rhs),
        evaluator.render(diff, 5),
        str(tol),
        precision,
        status,
        evaluator.terms,
        evaluator.render(evaluator.product_tail, 5)
    )


def check_finite_theta_sum(m, q, tol="1e-25", precision=128):
    return check_identity_numeric("finite_theta_sum", {"m": str(m), "q": str(q)}, tol, precision)


def _product_form(evaluator, values):
    return evaluator.qpoch_infinite(values["a"] * values["z"], values["q"])[0]


CLOSED_FORMS = {
    "one": lambda evaluator, values: evaluator.ctx.mpf(1),
    "qpoch_infinite": _product_form,
    "inv_qpoch_infinite": lambda evaluator, values: 1 / _product_form(evaluator, values)
}


def _closed_form(name):
    if name in CLOSED_FORMS:
        return CLOSED_FORMS[name]

    identity_name, _, side = name.rpartition(".")

    if side in ("lhs", "rhs") and identity_name in NUMERIC_IDENTITIES:
        return getattr(NUMERIC_IDENTITIES[identity_name], side)

    raise StructureError("Unknown closed form: {} (known: {} or <identity>.lhs/.rhs)".format(name, ", ".join(sorted(CLOSED_FORMS))))


def _tail_bound(evaluator, magnitudes):
    '''
    Geometric estimate of the omitted tail from the last three nonzero terms;
    returns None when they do not decrease.
    '''
    nonzero = [(n, value) for n, value in enumerate(magnitudes) if value != 0][-3:]

    # Fewer than two terms left, the series is taken as a polynomial:
    if len(nonzero) < 2:
        return evaluator.ctx.mpf(0)

    ratio = max((second / first) ** (evaluator.ctx.mpf(1) / (j - i)) for (i, first), (j, second) in zip(nonzero, nonzero[1:]))

    if ratio >= 1:
        return None

    last, value = nonzero[-1]

    return value * ratio ** (len(magnitudes) - last) / (1 - ratio)


def spot_check_series(series, point, closedform, tol="1e-25", precision=128):
    '''
    Compares sum_n c_n(point) z^n with a closed form evaluated at the point;
    the status is "inconclusive" when the estimated truncation tail exceeds tol.
    '''
    evaluator = Evaluator(precision, tol)
    form = _closed_form(closedform)

    names = set(series.table.names) | {"z"}
    missing = sorted(name for name in names if name not in point)

    if missing:
        raise DomainError("Point lacks {}".format(", ".join(missing)))

    try:
        exact = {name: Fraction(str(point[name])) for name in series.table.names}
    except (ValueError, ZeroDivisionError):
        raise DomainError("Series coefficients are evaluated at rational points only: {}".format(point))

    values = {name: evaluator.number(value) for name, value in point.items()}
    z = values["z"]

    total = evaluator.ctx.mpf(0)
    magnitudes = []
    power = evaluator.ctx.mpf(1)

    for coeff in series.coeffs:
        term = evaluator.number(coeff.evaluate(exact)) * power
        total += term
        magnitudes.append(abs(term))
        power *= z

    evaluator.terms += len(magnitudes)

    expected = form(evaluator, values)
    diff = abs(total - expected)
    tail = _tail_bound(evaluator, magnitudes)

    if tail is None or tail > evaluator.tolerance:
        status = "inconclusive"
    elif diff <= evaluator.tolerance:
        status = "passed"
    else:
        status = "failed"

    log.info("Spot check against %s: %s", closedform, status)

    return NumericReport(
        "spot:{}".format(closedform),
        tuple((name, str(point[name])) for name in sorted(point)),
        evaluator.render(total),
        evaluator.render(expected),
        evaluator.render(diff, 5),
        str(tol),
        precision,
        status,
        evaluator.terms,
        evaluator.render(evaluator.product_tail, 5)
    )


def numeric_names():
    return sorted(NUMERIC_IDENTITIES)


def run_numeric(names=None, points=None, tol="1e-25", precision=128):
    '''
    Checks each named identity (all by default) at the given points or at its
    default grid.
    '''
    reports = []

    for name in names or numeric_names():
        identity = _identity(name)

        for point in points if points is not None else identity.points:
            reports.append(check_identity_numeric(name, point, tol, precision))

    return reports
