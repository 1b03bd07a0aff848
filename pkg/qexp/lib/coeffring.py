'''
Exact arithmetic for multivariate polynomials and rational functions with
arbitrary-precision integer coefficients.

Monomials are packed into a single Python integer: a total-degree field
followed by one field per symbol, each FIELD_WIDTH bits wide. Integer order
on packed keys is graded lexicographic order over the declared symbol order,
monomial multiplication is integer addition, and divisibility is read off
the guard bit at the top of every field.
'''

import math

from fractions import Fraction
from functools import reduce
from heapq import heapify, heappop, heappush

from qexp.lib.errors import PoleError, StructureError

FIELD_WIDTH = 32


class SymbolTable:
    '''
    Ordered, immutable set of symbol names shared by every polynomial built over it.
    '''

    def __init__(self, names):
        self.names = tuple(names)

        if len(set(self.names)) != len(self.names):
            raise StructureError("Duplicate symbol names: {}".format(", ".join(self.names)))

        for name in self.names:
            if not isinstance(name, str) or not name.isidentifier():
                raise StructureError("Invalid symbol name: {}".format(name))

        self.position = {name: idx for idx, name in enumerate(self.names)}
        self.size = len(self.names)

        self._mask = (1 << FIELD_WIDTH) - 1
        self._limit = 1 << (FIELD_WIDTH - 1)
        self._guard = sum(self._limit << (FIELD_WIDTH * idx) for idx in range(self.size + 1))
        self._degree_shift = FIELD_WIDTH * self.size

    def __eq__(self, other):
        return isinstance(other, SymbolTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __contains__(self, name):
        return name in self.position

    def __iter__(self):
        return iter(self.names)

    def __len__(self):
        return self.size

    def __repr__(self):
        return "SymbolTable({})".format(", ".join(self.names))

    def symbol(self, name):
        if name not in self.position:
            raise StructureError("Unknown symbol: {}".format(name))

        return Symbol(self, name)

    def extend(self, names):
        '''
        Table with the given names appended (those already present are skipped).
        '''
        new = [name for name in dict.fromkeys(names) if name not in self.position]

        if not new:
            return self

        return SymbolTable(self.names + tuple(new))

    def gen(self, name):
        return RatFun.from_poly(MultiPoly.gen(self, name))

    @property
    def q(self):
        return self.gen("q")

    def pack(self, exponents):
        if len(exponents) != self.size:
            raise StructureError("Exponent vector of length {} on a table of {} symbols".format(len(exponents), self.size))

        key = sum(exponents)

        for exponent in exponents:
            if exponent < 0:
                raise StructureError("Negative exponent: {}".format(tuple(exponents)))

            key = (key << FIELD_WIDTH) | exponent

        if key >> self._degree_shift >= self._limit:
            raise StructureError("Monomial degree too large: {}".format(tuple(exponents)))

        return key

    def unpack(self, key):
        mask = self._mask
        top = FIELD_WIDTH * (self.size - 1)

        return tuple((key >> (top - FIELD_WIDTH * idx)) & mask for idx in range(self.size))

    def degree(self, key):
        return key >> self._degree_shift

    def divides(self, key, other):
        # Guard bits survive the subtraction exactly where other >= key fieldwise:
        return ((other | self._guard) - key) & self._guard == self._guard

    def unit(self, idx, power=1):
        exponents = [0] * self.size
        exponents[idx] = power

        return self.pack(exponents)


class Symbol:
    __slots__ = ("table", "name")

    def __init__(self, table, name):
        if name not in table:
            raise StructureError("Unknown symbol: {}".format(name))

        self.table = table
        self.name = name

    @property
    def index(self):
        return self.table.position[self.name]

    def __eq__(self, other):
        return isinstance(other, Symbol) and self.name == other.name and self.table == other.table

    def __hash__(self):
        return hash((self.table, self.name))

    def __repr__(self):
        return self.name


class MultiPoly:
    '''
    Polynomial with integer coefficients; terms map packed monomials to
    non-zero integers.
    '''

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table, terms=None):
        self.table = table
        self.terms = {key: coeff for key, coeff in terms.items() if coeff} if terms else {}
        self._hash = None

    @classmethod
    def _wrap(cls, table, terms):
        poly = cls.__new__(cls)
        poly.table = table
        poly.terms = terms
        poly._hash = None

        return poly

    @classmethod
    def constant(cls, table, value):
        return cls._wrap(table, {0: value} if value else {})

    @classmethod
    def gen(cls, table, name, power=1):
        if name not in table:
            raise StructureError("Unknown symbol: {}".format(name))

        return cls._wrap(table, {table.unit(table.position[name], power): 1})

    @classmethod
    def monomial(cls, table, exponents, coeff=1):
        return cls._wrap(table, {table.pack(exponents): coeff} if coeff else {})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        return self.terms.get(0, 0)

    def leading_coeff(self):
        return self.terms[max(self.terms)]

    def content(self):
        return reduce(math.gcd, self.terms.values(), 0)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.table.size

        keys = iter(self.terms)
        low = list(self.table.unpack(next(keys)))

        for key in keys:
            for idx, exponent in enumerate(self.table.unpack(key)):
                if exponent < low[idx]:
                    low[idx] = exponent

        return tuple(low)

    def _check(self, other):
        if self.table is not other.table and self.table != other.table:
            raise StructureError("Symbol tables differ: {} and {}".format(self.table, other.table))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other

        if isinstance(other, int):
            return MultiPoly.constant(self.table, other)

        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        big, small = (self, other) if len(self.terms) >= len(other.terms) else (other, self)
        terms = dict(big.terms)

        for key, coeff in small.terms.items():
            value = terms.get(key, 0) + coeff

            if value:
                terms[key] = value
            else:
                del terms[key]

        return MultiPoly._wrap(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap(self.table, {key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        if not self.terms or not other.terms:
            return MultiPoly._wrap(self.table, {})

        if len(self.terms) < len(other.terms):
            self, other = other, self

        if len(other.terms) == 1:
            ((shift, factor),) = other.terms.items()
            return MultiPoly._wrap(self.table, {key + shift: coeff * factor for key, coeff in self.terms.items()})

        terms = {}

        for key1, coeff1 in self.terms.items():
            for key2, coeff2 in other.terms.items():
                key = key1 + key2
                terms[key] = terms.get(key, 0) + coeff1 * coeff2

        return MultiPoly(self.table, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise StructureError("Invalid polynomial exponent: {}".format(exponent))

        result = MultiPoly.constant(self.table, 1)
        base = self

        while exponent:
            if exponent & 1:
                result = result * base

            exponent >>= 1

            if exponent:
                base = base * base

        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.table, other)

        if not isinstance(other, MultiPoly):
            return NotImplemented

        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self.terms.items())))

        return self._hash

    def scale_by(self, factor):
        if factor == 1:
            return self

        return MultiPoly(self.table, {key: coeff * factor for key, coeff in self.terms.items()})

    def exact_div_int(self, divisor):
        if divisor == 1:
            return self

        return MultiPoly._wrap(self.table, {key: coeff // divisor for key, coeff in self.terms.items()})

    def shift_down(self, exponents):
        shift = self.table.pack(exponents)

        return MultiPoly._wrap(self.table, {key - shift: coeff for key, coeff in self.terms.items()})

    def divexact(self, other):
        '''
        Exact quotient self / other, or None when other does not divide self
        over the integers.
        '''
        self._check(other)
        table = self.table

        if not other.terms:
            raise PoleError("Division by the zero polynomial")

        if not self.terms:
            return self

        if len(other.terms) == 1:
            ((shift, divisor),) = other.terms.items()
            terms = {}

            for key, coeff in self.terms.items():
                if not table.divides(shift, key):
                    return None

                quotient, remainder = divmod(coeff, divisor)

                if remainder:
                    return None

                terms[key - shift] = quotient

            return MultiPoly._wrap(table, terms)

        lead = max(other.terms)
        lead_coeff = other.terms[lead]

        if table.degree(lead) > table.degree(max(self.terms)):
            return None

        remainder = dict(self.terms)
        quotient = {}

        heap = [-key for key in remainder]
        heapify(heap)

        while heap:
            key = -heappop(heap)
            coeff = remainder.get(key)

            # Stale heap entry:
            if coeff is None:
                continue

            if not table.divides(lead, key):
                return None

            factor, rest = divmod(coeff, lead_coeff)

            if rest:
                return None

            shift = key - lead
            quotient[shift] = factor

            for dkey, dcoeff in other.terms.items():
                target = dkey + shift
                value = remainder.get(target, 0) - factor * dcoeff

                if value:
                    if target not in remainder:
                        heappush(heap, -target)

                    remainder[target] = value

                else:
                    remainder.pop(target, None)

        return MultiPoly._wrap(table, quotient)

    def evaluate(self, values):
        '''
        Exact value at a point given as {symbol index: Fraction}.
        '''
        total = Fraction(0)

        for key, coeff in self.terms.items():
            term = Fraction(coeff)

            for idx, exponent in enumerate(self.table.unpack(key)):
                if exponent:
                    if idx not in values:
                        raise StructureError("No value given for symbol {}".format(self.table.names[idx]))

                    term *= values[idx] ** exponent

            total += term

        return total

    def compose(self, values):
        '''
        Simultaneous substitution {symbol index: RatFun}, returned as a RatFun.

        With value_i = p_i / d_i and E_i the top degree of symbol i, the
        numerator sum(c * prod p_i^e_i * d_i^(E_i - e_i)) is built over a
        single common denominator prod d_i^E_i.
        '''
        table = self.table
        replaced = sorted(values)
        top = {idx: 0 for idx in replaced}
        unpacked = []

        for key, coeff in self.terms.items():
            exponents = table.unpack(key)

            for idx in replaced:
                if exponents[idx] > top[idx]:
                    top[idx] = exponents[idx]

            unpacked.append((exponents, coeff))

        replaced = [idx for idx in replaced if top[idx]]

        if not replaced:
            return RatFun.from_poly(self)

        polynomial = {idx: values[idx].is_polynomial() for idx in replaced}
        powers = {}

        def power(kind, idx, exponent):
            cached = powers.get((kind, idx, exponent))

            if cached is None:
                base = values[idx].num if kind == "num" else values[idx].den
                cached = powers[(kind, idx, exponent)] = base ** exponent

            return cached

        terms = {}

        for exponents, coeff in unpacked:
            rest = list(exponents)

            for idx in replaced:
                rest[idx] = 0

            term = MultiPoly._wrap(table, {table.pack(rest): coeff})

            for idx in replaced:
                exponent = exponents[idx]

                if exponent:
                    term = term * power("num", idx, exponent)

                if not polynomial[idx] and top[idx] > exponent:
                    term = term * power("den", idx, top[idx] - exponent)

            for key, coeff in term.terms.items():
                terms[key] = terms.get(key, 0) + coeff

        result = RatFun.from_poly(MultiPoly(table, terms))

        for idx in replaced:
            if not polynomial[idx]:
                result = result * values[idx].den_reciprocal() ** top[idx]

        return result

    def embed(self, table):
        '''
        Same polynomial over a table containing every symbol of this one.
        '''
        if table == self.table:
            return self

        try:
            target = [table.position[name] for name in self.table.names]
        except KeyError as err:
            raise StructureError("Cannot embed into {}: missing symbol {}".format(table, err))

        terms = {}

        for key, coeff in self.terms.items():
            exponents = [0] * table.size

            for idx, exponent in enumerate(self.table.unpack(key)):
                exponents[target[idx]] = exponent

            terms[table.pack(exponents)] = coeff

        return MultiPoly._wrap(table, terms)

    def _render_monomial(self, key):
        parts = []

        for name, exponent in zip(self.table.names, self.table.unpack(key)):
            if exponent == 1:
                parts.append(name)
            elif exponent:
                parts.append("{}^{}".format(name, exponent))

        return "*".join(parts)

    def render(self):
        if not self.terms:
            return "0"

        out = []

        for key in sorted(self.terms, reverse=True):
            coeff = self.terms[key]
            monomial = self._render_monomial(key)
            magnitude = abs(coeff)

            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = "{}*{}".format(magnitude, monomial)

            if not out:
                out.append("-" + body if coeff < 0 else body)
            else:
                out.append(("- " if coeff < 0 else "+ ") + body)

        return " ".join(out)

    def __repr__(self):
        return "MultiPoly({})".format(self.render())


def _split(poly):
    '''
    Write a non-zero polynomial as signed content * monomial * primitive part;
    returns the signed content and the factor multiset.
    '''
    table = poly.table
    content = poly.content()

    if poly.leading_coeff() < 0:
        content = -content

    low = poly.min_exponents()
    factors = {}

    for idx, exponent in enumerate(low):
        if exponent:
            factors[MultiPoly._wrap(table, {table.unit(idx): 1})] = exponent

    rest = poly.shift_down(low) if any(low) else poly
    rest = rest.exact_div_int(content)

    if not rest.is_constant():
        factors[rest] = factors.get(rest, 0) + 1

    return content, factors


def _cancel(num, factors):
    if not factors:
        return num, factors

    remaining = {}

    for factor, multiplicity in factors.items():
        while multiplicity:
            quotient = num.divexact(factor)

            if quotient is None:
                break

            num = quotient
            multiplicity -= 1

        if multiplicity:
            remaining[factor] = multiplicity

    return num, remaining


def _merge_lcm(first, second):
    merged = dict(first)

    for factor, multiplicity in second.items():
        if merged.get(factor, 0) < multiplicity:
            merged[factor] = multiplicity

    return merged


def _cofactor(table, factors, target):
    poly = MultiPoly.constant(table, 1)

    for factor, multiplicity in target.items():
        gap = multiplicity - factors.get(factor, 0)

        if gap:
            poly = poly * factor ** gap

    return poly


def _pairs(assignments):
    if isinstance(assignments, dict):
        return list(assignments.items())

    return list(assignments)


class RatFun:
    '''
    Rational function: an expanded numerator over a factored denominator.

    The denominator is a positive integer scale times a product of distinct
    primitive polynomials with positive leading coefficient, each carrying a
    multiplicity. Single-symbol monomials are kept as separate factors. The
    integer content of the numerator is coprime to the scale.
    '''

    __slots__ = ("num", "factors", "scale", "_den")

    def __init__(self, num, den=None):
        if not isinstance(num, MultiPoly):
            raise StructureError("Numerator must be a polynomial: {!r}".format(num))

        factors, scale = {}, 1

        if den is not None:
            if isinstance(den, int):
                den = MultiPoly.constant(num.table, den)

            num._check(den)

            if den.is_zero():
                raise PoleError("Zero denominator")

            scale, factors = _split(den)

            if scale < 0:
                num, scale = -num, -scale

        built = RatFun._build(num, factors, scale)

        self.num = built.num
        self.factors = built.factors
        self.scale = built.scale
        self._den = None

    @classmethod
    def _build(cls, num, factors, scale, cancel=True):
        result = cls.__new__(cls)
        result._den = None

        if not num.terms:
            result.num, result.factors, result.scale = num, {}, 1
            return result

        if cancel:
            num, factors = _cancel(num, factors)

        common = math.gcd(num.content(), scale)

        if common > 1:
            num = num.exact_div_int(common)
            scale //= common

        result.num, result.factors, result.scale = num, factors, scale

        return result

    @classmethod
    def from_poly(cls, poly):
        return cls._build(poly, {}, 1, cancel=False)

    @classmethod
    def from_int(cls, table, value):
        return cls._build(MultiPoly.constant(table, value), {}, 1, cancel=False)

    @classmethod
    def from_fraction(cls, table, value):
        value = Fraction(value)

        return cls._build(MultiPoly.constant(table, value.numerator), {}, value.denominator, cancel=False)

    @classmethod
    def zero(cls, table):
        return cls.from_int(table, 0)

    @classmethod
    def one(cls, table):
        return cls.from_int(table, 1)

    @classmethod
    def coerce(cls, table, value):
        if isinstance(value, RatFun):
            if value.table != table:
                raise StructureError("Symbol tables differ: {} and {}".format(value.table, table))
            return value

        if isinstance(value, MultiPoly):
            return cls.from_poly(value)

        if isinstance(value, int):
            return cls.from_int(table, value)

        if isinstance(value, Fraction):
            return cls.from_fraction(table, value)

        raise StructureError("Cannot interpret as a rational function: {!r}".format(value))

    @property
    def table(self):
        return self.num.table

    @property
    def den(self):
        if self._den is None:
            den = MultiPoly.constant(self.table, self.scale)

            for factor, multiplicity in self.factors.items():
                den = den * factor ** multiplicity

            self._den = den

        return self._den

    def is_zero(self):
        return not self.num.terms

    def is_polynomial(self):
        return not self.factors and self.scale == 1

    def is_constant(self):
        return not self.factors and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise StructureError("Not a constant: {}".format(self.render()))

        return Fraction(self.num.constant_value(), self.scale)

    def den_reciprocal(self):
        return RatFun._build(MultiPoly.constant(self.table, 1), dict(self.factors), self.scale, cancel=False)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            self.num._check(other.num)
            return other

        if isinstance(other, (int, Fraction, MultiPoly)):
            return RatFun.coerce(self.table, other)

        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        if not self.num.terms:
            return other

        if not other.num.terms:
            return self

        if self.scale == other.scale and self.factors == other.factors:
            return RatFun._build(self.num + other.num, self.factors, self.scale)

        factors = _merge_lcm(self.factors, other.factors)
        scale = self.scale * other.scale // math.gcd(self.scale, other.scale)

        left = (self.num * _cofactor(self.table, self.factors, factors)).scale_by(scale // self.scale)
        right = (other.num * _cofactor(self.table, other.factors, factors)).scale_by(scale // other.scale)

        return RatFun._build(left + right, factors, scale)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._build(-self.num, self.factors, self.scale, cancel=False)

    def __sub__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        if not self.num.terms or not other.num.terms:
            return RatFun.zero(self.table)

        if other.is_polynomial() and other.num.is_constant():
            return RatFun._build(self.num.scale_by(other.num.constant_value()), self.factors, self.scale, cancel=False)

        if self.is_polynomial() and self.num.is_constant():
            return RatFun._build(other.num.scale_by(self.num.constant_value()), other.factors, other.scale, cancel=False)

        left, right_factors = _cancel(self.num, other.factors)
        right, left_factors = _cancel(other.num, self.factors)

        factors = dict(left_factors)

        for factor, multiplicity in right_factors.items():
            factors[factor] = factors.get(factor, 0) + multiplicity

        return RatFun._build(left * right, factors, self.scale * other.scale, cancel=False)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.num.terms:
            raise PoleError("Division by the zero rational function")

        content, factors = _split(self.num)
        num = self.den

        if content < 0:
            num, content = -num, -content

        return RatFun._build(num, factors, content)

    def __truediv__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return other * self.reciprocal()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            raise StructureError("Invalid exponent: {}".format(exponent))

        if exponent < 0:
            return self.reciprocal() ** (-exponent)

        if exponent == 0:
            return RatFun.one(self.table)

        factors = {factor: multiplicity * exponent for factor, multiplicity in self.factors.items()}

        return RatFun._build(self.num ** exponent, factors, self.scale ** exponent, cancel=False)

    def equals(self, other):
        '''
        Exact equality by cross-multiplication over the lcm of both denominators.
        '''
        other = self._coerce(other)

        if other is NotImplemented:
            raise StructureError("Cannot compare with {!r}".format(other))

        if self.scale == other.scale and self.factors == other.factors:
            return self.num == other.num

        factors = _merge_lcm(self.factors, other.factors)
        scale = self.scale * other.scale // math.gcd(self.scale, other.scale)

        left = (self.num * _cofactor(self.table, self.factors, factors)).scale_by(scale // self.scale)
        right = (other.num * _cofactor(self.table, other.factors, factors)).scale_by(scale // other.scale)

        return left == right

    def __eq__(self, other):
        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return self.equals(other)

    def __ne__(self, other):
        result = self.__eq__(other)

        if result is NotImplemented:
            return result

        return not result

    __hash__ = None

    def substitute(self, assignments):
        '''
        Simultaneous substitution of symbols (names or Symbol objects) by
        rational functions over the same table.
        '''
        values = {}

        for target, value in _pairs(assignments):
            name = target.name if isinstance(target, Symbol) else target

            if name not in self.table:
                raise StructureError("Unknown symbol in substitution: {}".format(name))

            idx = self.table.position[name]

            if idx in values:
                raise StructureError("Symbol assigned twice: {}".format(name))

            values[idx] = RatFun.coerce(self.table, value)

        if not values:
            return self

        result = self.num.compose(values)

        for factor, multiplicity in self.factors.items():
            image = factor.compose(values)

            if image.is_zero():
                raise PoleError("Substitution makes the denominator factor {} vanish".format(factor.render()))

            result = result / image ** multiplicity

        if self.scale != 1:
            result = result / self.scale

        return result

    def evaluate(self, point):
        '''
        Exact rational value at a point assigning every occurring symbol.
        '''
        values = {}

        for target, value in _pairs(point):
            name = target.name if isinstance(target, Symbol) else target

            if name in self.table:
                values[self.table.position[name]] = Fraction(value)

        num = self.num.evaluate(values)
        den = Fraction(self.scale)

        for factor, multiplicity in self.factors.items():
            den *= factor.evaluate(values) ** multiplicity

        if den == 0:
            raise PoleError("Pole of {} at {}".format(self.render(), dict((self.table.names[idx], str(value)) for idx, value in values.items())))

        return num / den

    def embed(self, table):
        if table == self.table:
            return self

        num = self.num.embed(table)
        factors = {}

        for factor, multiplicity in self.factors.items():
            image = factor.embed(table)

            # Leading term may change with the symbol order:
            if image.leading_coeff() < 0:
                image = -image

                if multiplicity % 2:
                    num = -num

            factors[image] = multiplicity

        return RatFun._build(num, factors, self.scale, cancel=False)

    def render(self):
        if self.is_polynomial():
            return self.num.render()

        return "({})/({})".format(self.num.render(), self.den.render())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "RatFun({})".format(self.render())


def poly_arith(op, p, r=None):
    if op == "add":
        return p + r
    elif op == "mul":
        return p * r
    elif op == "neg":
        return -p
    else:
        raise ValueError("Invalid polynomial operation: {}".format(op))


def ratfun_arith(op, f, g=None):
    if op == "add":
        return f + g
    elif op == "sub":
        return f - g
    elif op == "mul":
        return f * g
    elif op == "div":
        return f / g
    elif op == "neg":
        return -f
    else:
        raise ValueError("Invalid rational function operation: {}".format(op))


def ratfun_equals(f, g):
    return f.equals(g)


def substitute(f, assignments):
    return f.substitute(assignments)


def eval_rational(f, point):
    return f.evaluate(point)
