from fractions import Fraction

from mpmath.ctx_mp import MPContext
from ocrd_utils import getLogger

from qexp.lib.errors import DomainError, PoleError


class Evaluator:
    '''
    Evaluates q-products and convergent sums in its own mpmath context, so
    that tasks running at different precisions never share state.
    '''

    log = getLogger("qexp.lib.mp")

    def __init__(self, precision=128, tolerance="1e-25", patience=5, max_terms=20000):
        '''
        Constructs an Evaluator working at the given binary precision; sums stop
        after `patience` consecutive terms below tolerance / 100.
        '''

        if precision < 53:
            raise DomainError("Precision below double precision: {} bits".format(precision))

        self.ctx = MPContext()
        self.ctx.prec = precision

        self.precision = precision
        self.patience = patience
        self.max_terms = max_terms

        self.tolerance = abs(self.number(tolerance))
        self.threshold = self.tolerance / 100
        self.epsilon = self.ctx.ldexp(self.ctx.mpf(1), -precision - 16)

        # Terms consumed by every sum and product evaluated so far:
        self.terms = 0

        # Sum of the |log| bounds on the factors omitted from infinite products:
        self.product_tail = self.ctx.mpf(0)

    def number(self, value):
        '''
        Converts an int, Fraction, float, complex or numeric string ("1/3",
        "0.25", "0.1+0.2j") to an mpf/mpc of this context.
        '''

        ctx = self.ctx

        if isinstance(value, bool):
            raise DomainError("Not a number: {!r}".format(value))

        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return ctx.mpf(value.numerator) / value.denominator

        if isinstance(value, str):
            text = value.strip().replace(" ", "")

            try:
                return self.number(Fraction(text))
            except (ValueError, ZeroDivisionError):
                pass

            try:
                return ctx.mpc(complex(text.replace("i", "j")))
            except ValueError:
                raise DomainError("Cannot read a numeric value from {!r}".format(value))

        return ctx.convert(value)

    def render(self, value, digits=20):
        return self.ctx.nstr(value, digits)

    def qpoch(self, c, n, q):
        '''
        (c;q)_n for any integer n, or for n = None the infinite product.
        '''

        if n is None:
            return self.qpoch_infinite(c, q)[0]

        result = self.ctx.mpf(1)

        if n >= 0:
            power = self.ctx.mpf(1)

            for _ in range(n):
                result *= 1 - c * power
                power *= q

        else:
            for j in range(1, -n + 1):
                factor = 1 - c * q ** (-j)

                if factor == 0:
                    raise PoleError("({};q)_{} has a vanishing factor at j={}".format(self.render(c), n, j))

                result /= factor

        return result

    def qpoch_infinite(self, c, q):
        '''
        (c;q)_oo truncated once |c q^i| drops below the working epsilon.

        Returns the value, a bound on |log| of the omitted factors, and the
        number of factors used.
        '''

        if abs(q) >= 1:
            raise DomainError("(c;q)_oo requires |q| < 1, got q={}".format(self.render(q)))

        result = self.ctx.mpf(1)
        term = c
        count = 0

        while abs(term) >= self.epsilon:
            result *= 1 - term
            term *= q
            count += 1

            if count > self.max_terms:
                raise DomainError("(c;q)_oo did not settle within {} factors".format(self.max_terms))

        # |log prod_{j>=i}(1 - c q^j)| <= sum |c q^j| / (1 - |c q^j|):
        tail = abs(term) / ((1 - abs(q)) * (1 - abs(term)))

        self.terms += count
        self.product_tail += tail

        return result, tail, count

    def sum_terms(self, terms, name="series"):
        '''
        Sums an iterable of terms until `patience` consecutive ones fall below
        tolerance / 100, or the iterable ends.
        '''

        total = self.ctx.mpf(0)
        small = 0
        count = 0

        for term in terms:
            total += term
            count += 1

            if abs(term) < self.threshold:
                small += 1

                if small >= self.patience:
                    break

            else:
                small = 0

            if count >= self.max_terms:
                raise DomainError("{} did not converge within {} terms".format(name, self.max_terms))

        self.log.debug("Summed %s with %i terms", name, count)
        self.terms += count

        return total

    def theta(self, x, p):
        '''
        Partial theta function sum_k (-1)^k p^(k(k-1)/2) x^k.
        '''

        def terms():
            term = self.ctx.mpf(1)
            power = self.ctx.mpf(1)

            while True:
                yield term

                term = term * (-x) * power
                power *= p

        return self.sum_terms(terms(), "partial theta")

    def qbinomial(self, m, n, q):
        if n < 0 or n > m:
            return self.ctx.mpf(0)

        return self.qpoch(q, m, q) / (self.qpoch(q, n, q) * self.qpoch(q, m - n, q))
