"""Elements of the mirabolic module and the generator tokens that act on them."""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from mirabolic_howe.algebra.decorated import DecoratedMatrix
from mirabolic_howe.algebra.laurent import LaurentPolynomial
from mirabolic_howe.errors import DimensionMismatch

_TOKEN = re.compile(r'^(E|F|H\+|H-|L)(\d*)$')


class Side(Enum):
    LEFT = 'left'
    RIGHT = 'right'


class TokenKind(Enum):
    E = 'E'
    F = 'F'
    HPLUS = 'H+'
    HMINUS = 'H-'
    L = 'L'


@dataclass(frozen=True)
class GeneratorToken(object):
    """One of E_h, F_h, H_r^+, H_r^-, L.

    E_h and F_h take 1 <= h <= size - 1, H_r^{+-} take 1 <= r <= size, L carries no index.
    """

    kind: TokenKind
    index: Optional[int] = None

    def validate(self, size):
        if self.kind is TokenKind.L:
            if self.index is not None:
                raise ValueError('L takes no index')
            return self
        limit = size - 1 if self.kind in (TokenKind.E, TokenKind.F) else size
        if self.index is None or not 1 <= self.index <= limit:
            raise ValueError('{} needs an index in [1, {}]'.format(self.kind.value, limit))
        return self

    def mirrored(self):
        """E_h <-> F_h, the rest unchanged; this is the token matched under transpose."""
        if self.kind is TokenKind.E:
            return GeneratorToken(TokenKind.F, self.index)
        if self.kind is TokenKind.F:
            return GeneratorToken(TokenKind.E, self.index)
        return self

    @classmethod
    def parse(cls, text):
        match = _TOKEN.match(text.strip())
        if match is None:
            raise ValueError('unknown generator token {!r}'.format(text))
        kind = TokenKind(match.group(1))
        index = int(match.group(2)) if match.group(2) else None
        return cls(kind, index)

    def __str__(self):
        return self.kind.value + ('' if self.index is None else str(self.index))


def tokens_for(size):
    """Every generator token of the algebra of the given size, in a fixed order."""
    tokens = [GeneratorToken(TokenKind.E, h) for h in range(1, size)]
    tokens += [GeneratorToken(TokenKind.F, h) for h in range(1, size)]
    tokens += [GeneratorToken(TokenKind.HPLUS, r) for r in range(1, size + 1)]
    tokens += [GeneratorToken(TokenKind.HMINUS, r) for r in range(1, size + 1)]
    tokens.append(GeneratorToken(TokenKind.L))
    return tokens


@dataclass(frozen=True)
class Context(object):
    n: int
    m: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.d < 0:
            raise ValueError('need n, m >= 1 and d >= 0, got {}'.format(self.as_tuple()))

    def as_tuple(self):
        return self.n, self.m, self.d

    @classmethod
    def of(cls, x):
        return cls(x.n, x.m, x.total)

    def __str__(self):
        return '({},{},{})'.format(self.n, self.m, self.d)


class ModuleElement(object):
    """A finite Z[v, v^-1]-combination of standard basis elements [A]_Delta of one context."""

    __slots__ = ('context', '_terms')

    def __init__(self, context, terms=None):
        self.context = context
        self._terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for x, coefficient in items:
                self._accumulate(x, coefficient)

    def _accumulate(self, x, coefficient):
        if Context.of(x) != self.context:
            raise DimensionMismatch('{} does not belong to context {}'.format(x.label(), self.context))
        coefficient = LaurentPolynomial.coerce(coefficient)
        total = self._terms.get(x, LaurentPolynomial.zero()) + coefficient
        if total.is_zero():
            self._terms.pop(x, None)
        else:
            self._terms[x] = total

    @classmethod
    def basis(cls, x):
        return cls(Context.of(x), {x: LaurentPolynomial.one()})

    @classmethod
    def zero(cls, context):
        return cls(context)

    def items(self):
        """(DecoratedMatrix, LaurentPolynomial) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, x):
        return self._terms.get(x, LaurentPolynomial.zero())

    def support(self):
        return [x for x, _ in self.items()]

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if self.context != other.context:
            raise DimensionMismatch('contexts {} and {} differ'.format(self.context, other.context))

    def __add__(self, other):
        self._check(other)
        result = ModuleElement(self.context, self._terms)
        for x, coefficient in other._terms.items():
            result._accumulate(x, coefficient)
        return result

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, coefficient):
        coefficient = LaurentPolynomial.coerce(coefficient)
        return ModuleElement(self.context, {x: c * coefficient for x, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self):
        return hash((self.context, frozenset(self._terms.items())))

    def __repr__(self):
        return 'ModuleElement({}, {})'.format(self.context, {x.label(): str(c) for x, c in self.items()})

    def to_json(self):
        n, m, d = self.context.as_tuple()
        return {'context': {'n': n, 'm': m, 'd': d},
                'terms': [{'basis': x.to_json(), 'coeff': c.to_json()} for x, c in self.items()]}

    @classmethod
    def from_json(cls, data):
        context = Context(data['context']['n'], data['context']['m'], data['context']['d'])
        return cls(context, [(DecoratedMatrix.from_json(term['basis']), LaurentPolynomial.from_json(term['coeff']))
                             for term in data['terms']])
