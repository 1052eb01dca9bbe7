"""Exact Laurent polynomials in v with integer coefficients.

Every coefficient produced by the action engine lives in Z[v, v^-1]. Values are compared
with finite-field counts after the specialization v^2 = q, which lands in Q(sqrt(q)).
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from mirabolic_howe.errors import NotDivisible

_TERM = re.compile(r'^(?:(\d+)\*)?v(?:\^(-?\d+))?$')


class LaurentPolynomial(object):
    """A finite map exponent -> nonzero integer coefficient.

    Note:
        Instances are immutable and hashable. Zero coefficients are never stored, so two equal
        polynomials always have equal term tuples.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exponent, coefficient in items:
                if not isinstance(exponent, int) or not isinstance(coefficient, int):
                    raise TypeError('Laurent terms need integer exponents and coefficients')
                clean[exponent] = clean.get(exponent, 0) + coefficient
        self._terms = tuple(sorted((e, c) for e, c in clean.items() if c != 0))
        self._hash = None

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError('cannot use {!r} as a Laurent polynomial'.format(value))

    def terms(self):
        """Returns (exponent, coefficient) pairs in ascending exponent order."""
        return self._terms

    def coefficient(self, exponent):
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    @property
    def min_exponent(self):
        return self._terms[0][0] if self._terms else None

    @property
    def max_exponent(self):
        return self._terms[-1][0] if self._terms else None

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def shift(self, k):
        """Multiplies by v^k."""
        return LaurentPolynomial({e + k: c for e, c in self._terms})

    def substitute_inverse(self):
        """Returns p(v^-1)."""
        return LaurentPolynomial({-e: c for e, c in self._terms})

    def evaluate(self, value):
        """Evaluates at a rational (or any field) value of v."""
        value = Fraction(value)
        total = Fraction(0)
        for exponent, coefficient in self._terms:
            total += coefficient * value ** exponent
        return total

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms})

    def __sub__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPolynomial.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return lp_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise NotDivisible('only unit monomials have negative powers')
            e, c = self._terms[0]
            return LaurentPolynomial.monomial(e * power, c ** abs(power))
        result = LaurentPolynomial.one()
        for _ in range(power):
            result = result * self
        return result

    def __repr__(self):
        return 'LaurentPolynomial({})'.format(format_laurent(self))

    def __str__(self):
        return format_laurent(self)

    def to_json(self):
        """JSON object mapping exponent strings to coefficient strings, exponents ascending."""
        return {str(e): str(c) for e, c in self._terms}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data.items()})


V = LaurentPolynomial.monomial(1)
V_INV = LaurentPolynomial.monomial(-1)


def lp_multiply(a, b):
    product = {}
    for ea, ca in a.terms():
        for eb, cb in b.terms():
            product[ea + eb] = product.get(ea + eb, 0) + ca * cb
    return LaurentPolynomial(product)


def lp_exact_divide(a, b):
    """Divides a by b in Z[v, v^-1].

    Note:
        Both operands are shifted so that their lowest term is constant; an exact Laurent quotient
        is then an ordinary polynomial, found by long division from the top degree down.
    :param a            : dividend
    :param b            : nonzero divisor
    :return             : the quotient
    :raises NotDivisible: when b is zero, a leading coefficient does not divide, or a remainder is left
    """

    if b.is_zero():
        raise NotDivisible('division by the zero polynomial')
    if a.is_zero():
        return LaurentPolynomial.zero()

    shift = a.min_exponent - b.min_exponent
    remainder = {e - a.min_exponent: c for e, c in a.terms()}
    divisor = {e - b.min_exponent: c for e, c in b.terms()}
    top = max(divisor)
    lead = divisor[top]
    quotient = {}

    while remainder:
        degree = max(remainder)
        if degree < top:
            raise NotDivisible('{} is not divisible by {}'.format(a, b))
        coefficient, rest = divmod(remainder[degree], lead)
        if rest:
            raise NotDivisible('{} is not divisible by {}'.format(a, b))
        step = degree - top
        quotient[step] = coefficient
        for e, c in divisor.items():
            value = remainder.get(e + step, 0) - coefficient * c
            if value:
                remainder[e + step] = value
            else:
                remainder.pop(e + step, None)

    return LaurentPolynomial(quotient).shift(shift)


def gauss_bracket(n, t):
    """The bracket [[N, t]] = prod_{i=1..t} (v^{-2(N-i+1)} - 1) / (v^{-2i} - 1).

    It is the Gaussian binomial in v^-2, so it has nonnegative coefficients and only
    nonpositive even exponents. [[0, t]] is zero for t >= 1.
    """

    if n < 0 or t < 1:
        raise ValueError('gauss_bracket needs N >= 0 and t >= 1, got N={}, t={}'.format(n, t))
    numerator = LaurentPolynomial.one()
    denominator = LaurentPolynomial.one()
    for i in range(1, t + 1):
        numerator = numerator * (LaurentPolynomial.monomial(-2 * (n - i + 1)) - 1)
        denominator = denominator * (LaurentPolynomial.monomial(-2 * i) - 1)
    return lp_exact_divide(numerator, denominator)


@dataclass(frozen=True)
class SpecializedValue(object):
    """An element rational + surd * sqrt(q) of Q(sqrt(q)).

    When q is a perfect square the surd part is folded into the rational part, so equality
    is always a plain field comparison.
    """

    rational: Fraction
    surd: Fraction
    q: int

    def __post_init__(self):
        rational, surd = Fraction(self.rational), Fraction(self.surd)
        root = isqrt(self.q)
        if root * root == self.q and surd:
            rational, surd = rational + surd * root, Fraction(0)
        object.__setattr__(self, 'rational', rational)
        object.__setattr__(self, 'surd', surd)

    def _check(self, other):
        if self.q != other.q:
            raise ValueError('cannot combine values specialized at q={} and q={}'.format(self.q, other.q))

    def __add__(self, other):
        self._check(other)
        return SpecializedValue(self.rational + other.rational, self.surd + other.surd, self.q)

    def __sub__(self, other):
        self._check(other)
        return SpecializedValue(self.rational - other.rational, self.surd - other.surd, self.q)

    def __mul__(self, other):
        self._check(other)
        return SpecializedValue(self.rational * other.rational + self.surd * other.surd * self.q,
                                self.rational * other.surd + self.surd * other.rational, self.q)

    def is_zero(self):
        return self.rational == 0 and self.surd == 0

    def __str__(self):
        if not self.surd:
            return str(self.rational)
        return '{} + {}*sqrt({})'.format(self.rational, self.surd, self.q)


def specialize_v2(p, q):
    """Evaluates p at v = sqrt(q).

    :param p (LaurentPolynomial)   : polynomial to specialize
    :param q (int)                 : integer q >= 2, normally a prime power
    :return (SpecializedValue)     : exact value in Q(sqrt(q))
    """

    if q < 2:
        raise ValueError('q must be at least 2, got {}'.format(q))
    rational, surd = Fraction(0), Fraction(0)
    for exponent, coefficient in p.terms():
        half, odd = divmod(exponent, 2)
        if odd:
            surd += coefficient * Fraction(q) ** half
        else:
            rational += coefficient * Fraction(q) ** half
    return SpecializedValue(rational, surd, q)


def format_laurent(p):
    """Renders p with ascending exponents, e.g. 'v^-2 + 1' or '-3*v + 2*v^2'."""

    if p.is_zero():
        return '0'
    pieces = []
    for exponent, coefficient in p.terms():
        magnitude = abs(coefficient)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = 'v' if exponent == 1 else 'v^{}'.format(exponent)
            body = power if magnitude == 1 else '{}*{}'.format(magnitude, power)
        if not pieces:
            pieces.append(body if coefficient > 0 else '-' + body)
        else:
            pieces.append(('+ ' if coefficient > 0 else '- ') + body)
    return ' '.join(pieces)


def parse_laurent(text):
    """Inverse of format_laurent."""

    text = text.strip()
    if text == '0':
        return LaurentPolynomial.zero()
    tokens = text.replace('+ ', '+').replace('- ', '-').split()
    terms = {}
    for index, token in enumerate(tokens):
        sign = 1
        if token[0] in '+-':
            sign = -1 if token[0] == '-' else 1
            token = token[1:]
        elif index:
            raise ValueError('missing sign before {!r}'.format(token))
        if token.isdigit():
            exponent, coefficient = 0, int(token)
        else:
            match = _TERM.match(token)
            if match is None:
                raise ValueError('cannot parse Laurent term {!r}'.format(token))
            coefficient = int(match.group(1)) if match.group(1) else 1
            exponent = int(match.group(2)) if match.group(2) else 1
        terms[exponent] = terms.get(exponent, 0) + sign * coefficient
    return LaurentPolynomial(terms)
