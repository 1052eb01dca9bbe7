"""The left MS_{n,d}-action and the right MS_{m,d}-action on the standard basis [A]_Delta.

The left action follows the explicit case formulas: H scales, L splits by whether Delta starts
in row 1, and E_h / F_h split by which of the rows h, h+1 carry a decoration. The normative right
action is derived from the left one through the transpose anti-isomorphism; the printed right-hand
case formulas are kept as an independent cross-check (act_right_printed).
"""
import logging
from functools import lru_cache

from mirabolic_howe.algebra.corrections import check_literal
from mirabolic_howe.algebra.decorated import (DEFAULT_CONVENTION, make_decorated, marginals, moved_entries,
                                              transpose, transpose_defect)
from mirabolic_howe.algebra.generators import generator_components
from mirabolic_howe.algebra.laurent import LaurentPolynomial, gauss_bracket
from mirabolic_howe.algebra.module import Context, ModuleElement, Side, TokenKind
from mirabolic_howe.errors import MalformedDelta

logger = logging.getLogger(__name__)

ONE_MINUS_V2 = 1 - LaurentPolynomial.monomial(-2)


@lru_cache(maxsize=None)
def _mono(exponent):
    return LaurentPolynomial.monomial(exponent)


@lru_cache(maxsize=None)
def _bracket(value):
    return gauss_bracket(value, 1)


class PivotStatistics(object):
    """Row statistics beta, beta' and column statistics xi, xi' of A at index h."""

    def __init__(self, x, h):
        self.x = x
        self.h = h

    def beta(self, p):
        a, h = self.x.entry, self.h
        return sum(a(h, j) for j in range(p, self.x.m + 1)) - sum(a(h + 1, j) for j in range(p + 1, self.x.m + 1))

    def beta_prime(self, p):
        a, h = self.x.entry, self.h
        return sum(a(h + 1, j) for j in range(1, p + 1)) - sum(a(h, j) for j in range(1, p))

    def xi(self, p):
        a, h = self.x.entry, self.h
        return sum(a(i, h + 1) for i in range(1, p + 1)) - sum(a(i, h) for i in range(1, p))

    def xi_prime(self, p):
        a, h = self.x.entry, self.h
        return sum(a(i, h) for i in range(p, self.x.n + 1)) - sum(a(i, h + 1) for i in range(p + 1, self.x.n + 1))


class _Terms(object):
    """Accumulates the output of one basis element."""

    def __init__(self, x):
        self.x = x
        self.base = list(x.delta)
        self.out = []

    def move(self, plus, minus, coefficient, delta=None):
        entries = moved_entries(self.x, plus, minus)
        if entries is None:
            return
        y = make_decorated(entries, tuple(self.base if delta is None else delta))
        if y is not None:
            self.out.append((y, coefficient))

    def keep(self, coefficient, delta=None):
        y = make_decorated(self.x.entries, tuple(self.base if delta is None else delta))
        if y is not None:
            self.out.append((y, coefficient))


def _position(values, target):
    """1-based position of target in values, or None."""
    return values.index(target) + 1 if target in values else None


def _dispatch(positions_low, positions_high):
    """Case letter from the positions of index h and h+1 within Delta."""
    if positions_low is None and positions_high is None:
        return 'e'
    if positions_high is None:
        return 'f'
    if positions_low is None:
        return 'g'
    return 'h'


def left_case(x, token):
    """Which printed case applies to a left token on (A, Delta)."""
    if token.kind in (TokenKind.HPLUS, TokenKind.HMINUS):
        return 'a'
    if token.kind is TokenKind.L:
        if not x.delta:
            return 'd'
        return 'c' if x.delta[0][0] == 1 else 'b'
    rows = [i for i, _ in x.delta]
    return _dispatch(_position(rows, token.index), _position(rows, token.index + 1))


def right_case(x, token):
    if token.kind in (TokenKind.HPLUS, TokenKind.HMINUS):
        return 'a'
    if token.kind is TokenKind.L:
        if not x.delta:
            return 'd'
        return 'c' if x.delta[-1][1] == 1 else 'b'
    cols = [j for _, j in x.delta]
    return _dispatch(_position(cols, token.index), _position(cols, token.index + 1))


def _left_h(x, token):
    row_sums, _ = marginals(x)
    sign = -1 if token.kind is TokenKind.HPLUS else 1
    return [(x, _mono(sign * row_sums[token.index - 1]))]


def _left_l(x):
    a, m = x.entry, x.m
    terms = _Terms(x)
    first_row = sum(a(1, j) for j in range(1, m + 1))
    if not x.delta:
        terms.keep(_mono(-2 * first_row))
        for t in range(1, m + 1):
            if a(1, t) > 0:
                terms.keep(_mono(-first_row - sum(a(1, j) for j in range(t + 1, m + 1))), [(1, t)])
    elif x.delta[0][0] > 1:
        j1 = x.col_of(1)
        s = sum(a(1, j) for j in range(j1 + 1, m + 1))
        terms.keep(_mono(-2 * s))
        for t in range(j1 + 1, m + 1):
            if a(1, t) > 0:
                terms.keep(_mono(-2 * s + sum(a(1, j) for j in range(j1 + 1, t + 1))), [(1, t)] + terms.base)
    else:
        j1, j2 = x.col_of(1), x.col_of(2)
        s = sum(a(1, j) for j in range(j1 + 1, m + 1))
        factor = 1 - _mono(-2 * a(1, j1))
        head = -2 * s - sum(a(1, j) for j in range(1, j1 + 1))
        rest = terms.base[1:]
        for t in range(j2 + 1, m + 1):
            if a(1, t) > 0:
                terms.keep(_mono(head + sum(a(1, j) for j in range(1, t + 1))) * factor, [(1, t)] + rest)
        terms.keep(_mono(-2 * s - sum(a(1, j) for j in range(j2 + 1, j1 + 1))) * factor, rest)
    return terms.out


def _left_e(x, h):
    a, m = x.entry, x.m
    stats = PivotStatistics(x, h)
    beta = stats.beta
    terms = _Terms(x)
    base = terms.base
    rows = [i for i, _ in x.delta]
    low, high = _position(rows, h), _position(rows, h + 1)
    case = _dispatch(low, high)

    def up(p, coefficient, delta=None):
        terms.move((h, p), (h + 1, p), coefficient, delta)

    if case == 'e':
        for p in range(1, m + 1):
            if a(h + 1, p) >= 1:
                up(p, _mono(beta(p)) * _bracket(a(h, p) + 1))
    elif case == 'f':
        c, nxt = x.col_of(low), x.col_of(low + 1)
        for p in range(1, m + 1):
            if a(h + 1, p) >= 1:
                if nxt < p < c:
                    up(p, _mono(beta(p) - 1) * _bracket(a(h, p) + 1))
                elif p == c:
                    up(p, _mono(beta(p) - 1) * _bracket(a(h, c)))
                else:
                    up(p, _mono(beta(p)) * _bracket(a(h, p) + 1))
    elif case == 'g':
        t = high
        c, nxt = x.col_of(t), x.col_of(t + 1)
        for p in range(1, m + 1):
            if a(h + 1, p) >= 1:
                up(p, _mono(beta(p)) * _bracket(a(h, p) + 1))
        up(c, _mono(beta(c) - sum(a(h + 1, j) for j in range(nxt + 1, c + 1)) + 1),
           base[:t - 1] + [(h, c)] + base[t:])
        for s in range(nxt + 1, c):
            if a(h + 1, s) > 0:
                up(c, _mono(beta(c) - sum(a(h + 1, j) for j in range(s + 1, c + 1)) + 1),
                   base[:t - 1] + [(h, c), (h + 1, s)] + base[t:])
    else:
        if high != low + 1:
            raise MalformedDelta('rows {} and {} are not adjacent in {}'.format(h, h + 1, x.delta))
        c, c2, nxt2 = x.col_of(low), x.col_of(low + 1), x.col_of(low + 2)
        for p in range(1, m + 1):
            if a(h + 1, p) >= 1:
                if c2 < p < c:
                    up(p, _mono(beta(p) - 1) * _bracket(a(h, p) + 1))
                elif p == c:
                    up(p, _mono(beta(p) - 1) * _bracket(a(h, c)))
                else:
                    up(p, _mono(beta(p)) * _bracket(a(h, p) + 1))
        factor = ONE_MINUS_V2 * _bracket(a(h, c2) + 1)
        up(c2, _mono(beta(c2) - sum(a(h + 1, j) for j in range(nxt2 + 1, c2 + 1)) + 1) * factor,
           base[:low] + base[low + 1:])
        for s in range(nxt2 + 1, c2):
            if a(h + 1, s) > 0:
                up(c2, _mono(beta(c2) - sum(a(h + 1, j) for j in range(s + 1, c2 + 1)) + 1) * factor,
                   base[:low] + [(h + 1, s)] + base[low + 1:])
    return terms.out


def _left_f(x, h, literal):
    a, m = x.entry, x.m
    beta_prime = PivotStatistics(x, h).beta_prime
    terms = _Terms(x)
    base = terms.base
    rows = [i for i, _ in x.delta]
    low, high = _position(rows, h), _position(rows, h + 1)
    case = _dispatch(low, high)

    def down(p, coefficient, delta=None):
        terms.move((h + 1, p), (h, p), coefficient, delta)

    if case == 'e':
        for p in range(1, m + 1):
            if a(h, p) >= 1:
                down(p, _mono(beta_prime(p)) * _bracket(a(h + 1, p) + 1))
    elif case == 'f':
        c, nxt = x.col_of(low), x.col_of(low + 1)
        for p in range(1, m + 1):
            if a(h, p) >= 1:
                if 'left-F-f-band' in literal:
                    band = x.row_of(low + 1) < p <= x.row_of(low)
                else:
                    band = nxt < p <= c
                down(p, _mono(beta_prime(p) - band) * _bracket(a(h + 1, p) + 1))
        head = sum(a(h + 1, j) for j in range(1, nxt + 1))
        down(c, _mono(head - sum(a(h, j) for j in range(1, c))), base[:low - 1] + [(h + 1, c)] + base[low:])
        for s in range(nxt + 1, c):
            if a(h, s) >= 1:
                down(s, _mono(head - sum(a(h, j) for j in range(1, s))),
                     base[:low - 1] + [(h, c), (h + 1, s)] + base[low:])
    elif case == 'g':
        c2 = x.col_of(high)
        for p in range(1, m + 1):
            if a(h, p) >= 1:
                bracket = _bracket(a(h + 1, c2)) if p == c2 else _bracket(a(h + 1, p) + 1)
                down(p, _mono(beta_prime(p)) * bracket)
    else:
        if high != low + 1:
            raise MalformedDelta('rows {} and {} are not adjacent in {}'.format(h, h + 1, x.delta))
        c, c2 = x.col_of(low), x.col_of(low + 1)
        for p in range(1, m + 1):
            if a(h, p) >= 1:
                if p == c2:
                    down(p, _mono(beta_prime(p)) * _bracket(a(h + 1, c2)))
                else:
                    band = c2 < p <= c and 'left-F-h-band' not in literal
                    down(p, _mono(beta_prime(p) - band) * _bracket(a(h + 1, p) + 1))
        factor = ONE_MINUS_V2 * _bracket(a(h + 1, c2))
        anchor = beta_prime(c2)
        down(c, _mono(anchor - sum(a(h, j) for j in range(c2, c))) * factor,
             base[:low - 1] + [(h + 1, c)] + base[low + 1:])
        for s in range(c2 + 1, c):
            if a(h, s) >= 1:
                down(s, _mono(anchor - sum(a(h, j) for j in range(c2, s))) * factor,
                     base[:low - 1] + [(h, c), (h + 1, s)] + base[low + 1:])
    return terms.out


def left_terms(x, token, literal=frozenset()):
    """Expansion of token * [x] as a list of (DecoratedMatrix, LaurentPolynomial) pairs."""

    if token.kind in (TokenKind.HPLUS, TokenKind.HMINUS):
        return _left_h(x, token)
    if token.kind is TokenKind.L:
        return _left_l(x)
    if token.kind is TokenKind.E:
        return _left_e(x, token.index)
    return _left_f(x, token.index, literal)


def _collect(context, pieces):
    accumulated = {}
    for y, coefficient in pieces:
        accumulated[y] = accumulated.get(y, LaurentPolynomial.zero()) + coefficient
    return ModuleElement(context, accumulated)


def act_left(token, element, literal=frozenset()):
    """token * element for a token of MS_{n,d}."""

    token.validate(element.context.n)
    literal = check_literal(literal)
    pieces = []
    for x, coefficient in element.items():
        pieces.extend((y, coefficient * c) for y, c in left_terms(x, token, literal))
    return _collect(element.context, pieces)


def transpose_element(element):
    n, m, d = element.context.as_tuple()
    return ModuleElement(Context(m, n, d), [(transpose(x), c) for x, c in element.items()])


def transpose_shift(x, token, convention=DEFAULT_CONVENTION):
    """Exponent s with e_x * e_B = v^s (e_{B^t} * e_{x^t})^t in the [.]-bookkeeping.

    Note:
        s is the transpose defect of the right-hand generator summand B. None means the token
        annihilates x.
    """

    _, col_sums = marginals(x)
    components = generator_components(token, col_sums, Side.RIGHT)
    if not components:
        return None
    return transpose_defect(components[0][0], convention)


def act_right_by_transpose(element, token, convention=DEFAULT_CONVENTION):
    """element * token computed as the transpose of (mirrored token) * element^t."""

    token.validate(element.context.m)
    mirror = token.mirrored()
    pieces = []
    for x, coefficient in element.items():
        shift = transpose_shift(x, token, convention)
        if shift is None:
            continue
        defect = transpose_defect(x, convention)
        for y, c in left_terms(transpose(x), mirror):
            exponent = defect + shift + transpose_defect(y, convention)
            pieces.append((transpose(y), coefficient * c * _mono(exponent)))
    return _collect(element.context, pieces)


def act_right(element, token):
    """element * token for a token of MS_{m,d}; the transpose-derived action is normative."""
    return act_right_by_transpose(element, token)


def _right_h(x, token):
    _, col_sums = marginals(x)
    sign = -1 if token.kind is TokenKind.HPLUS else 1
    return [(x, _mono(sign * col_sums[token.index - 1]))]


def _right_l(x):
    a, n = x.entry, x.n
    terms = _Terms(x)
    first_col = sum(a(i, 1) for i in range(1, n + 1))
    k = len(x.delta)
    if not x.delta:
        terms.keep(_mono(-2 * first_col))
        for t in range(1, n + 1):
            if a(t, 1) > 0:
                terms.keep(_mono(-first_col - sum(a(i, 1) for i in range(t + 1, n + 1))), [(t, 1)])
    elif x.delta[-1][1] > 1:
        ik = x.row_of(k)
        s = sum(a(i, 1) for i in range(ik + 1, n + 1))
        terms.keep(_mono(-2 * s))
        for t in range(ik + 1, n + 1):
            if a(t, 1) > 0:
                terms.keep(_mono(-2 * s + sum(a(i, 1) for i in range(ik + 1, t + 1))), terms.base + [(t, 1)])
    else:
        r, prv = x.row_of(k), x.row_of(k - 1)
        s = sum(a(i, 1) for i in range(r + 1, n + 1))
        factor = 1 - _mono(-2 * a(r, 1))
        head = -2 * s - sum(a(i, 1) for i in range(1, r + 1))
        rest = terms.base[:-1]
        for t in range(prv + 1, n + 1):
            if a(t, 1) > 0:
                terms.keep(_mono(head + sum(a(i, 1) for i in range(1, t + 1))) * factor, rest + [(t, 1)])
        terms.keep(_mono(-2 * s - sum(a(i, 1) for i in range(prv + 1, r + 1))) * factor, rest)
    return terms.out


def _right_e(x, h, literal):
    a, n = x.entry, x.n
    stats = PivotStatistics(x, h)
    xi = stats.xi
    terms = _Terms(x)
    base = terms.base
    cols = [j for _, j in x.delta]
    low, high = _position(cols, h), _position(cols, h + 1)
    case = _dispatch(low, high)

    def across(p, coefficient, delta=None):
        terms.move((p, h + 1), (p, h), coefficient, delta)

    if case == 'e':
        for p in range(1, n + 1):
            if a(p, h) >= 1:
                across(p, _mono(xi(p)) * _bracket(a(p, h + 1) + 1))
    elif case == 'f':
        r, prv = x.row_of(low), x.row_of(low - 1)
        for p in range(1, n + 1):
            if a(p, h) >= 1:
                band = prv < p <= r
                across(p, _mono(xi(p) - band) * _bracket(a(p, h + 1) + 1))
        head = sum(a(i, h + 1) for i in range(1, prv + 1))
        across(r, _mono(head - sum(a(i, h) for i in range(1, r))), base[:low - 1] + [(r, h + 1)] + base[low:])
        for s in range(prv + 1, r):
            if a(s, h) >= 1:
                across(s, _mono(head - sum(a(i, h) for i in range(1, s))),
                       base[:low - 1] + [(s, h + 1), (r, h)] + base[low:])
    elif case == 'g':
        r = x.row_of(high)
        for p in range(1, n + 1):
            if a(p, h) >= 1:
                bracket = _bracket(a(r, h + 1)) if p == r else _bracket(a(p, h + 1) + 1)
                across(p, _mono(xi(p)) * bracket)
    else:
        if low != high + 1:
            raise MalformedDelta('columns {} and {} are not adjacent in {}'.format(h + 1, h, x.delta))
        r, r2 = x.row_of(low), x.row_of(high)
        for p in range(1, n + 1):
            if a(p, h) >= 1:
                if p == r2:
                    across(p, _mono(xi(p)) * _bracket(a(r2, h + 1)))
                else:
                    band = r2 < p <= r and 'right-E-h-band' not in literal
                    across(p, _mono(xi(p) - band) * _bracket(a(p, h + 1) + 1))
        factor = ONE_MINUS_V2 * _bracket(a(r2, h + 1))
        across(r, _mono(xi(r2) - sum(a(i, h) for i in range(r2, r))) * factor,
               base[:high - 1] + [(r, h + 1)] + base[low:])
        anchor = xi(h + 1) if 'right-E-h-xi-index' in literal else xi(r2)
        for s in range(r2 + 1, r):
            if a(s, h) >= 1:
                across(s, _mono(anchor - sum(a(i, h) for i in range(r2, s))) * factor,
                       base[:high - 1] + [(s, h + 1), (r, h)] + base[low:])
    return terms.out


def _right_f(x, h, literal):
    a, n = x.entry, x.n
    stats = PivotStatistics(x, h)
    xi, xi_prime = stats.xi, stats.xi_prime
    terms = _Terms(x)
    base = terms.base
    cols = [j for _, j in x.delta]
    low, high = _position(cols, h), _position(cols, h + 1)
    case = _dispatch(low, high)

    def back(p, coefficient, delta=None):
        terms.move((p, h), (p, h + 1), coefficient, delta)

    if case == 'e':
        for p in range(1, n + 1):
            if a(p, h + 1) >= 1:
                back(p, _mono(xi_prime(p)) * _bracket(a(p, h) + 1))
    elif case == 'f':
        r, prv = x.row_of(low), x.row_of(low - 1)
        for p in range(1, n + 1):
            if a(p, h + 1) >= 1:
                if prv < p < r:
                    back(p, _mono(xi_prime(p) - 1) * _bracket(a(p, h) + 1))
                elif p == r:
                    back(p, _mono(xi_prime(p) - 1) * _bracket(a(r, h)))
                else:
                    back(p, _mono(xi_prime(p)) * _bracket(a(p, h) + 1))
    elif case == 'g':
        r, prv = x.row_of(high), x.row_of(high - 1)
        for p in range(1, n + 1):
            if a(p, h + 1) >= 1:
                back(p, _mono(xi_prime(p)) * _bracket(a(p, h) + 1))
        anchor = xi(r) if 'right-F-g-xi' in literal else xi_prime(r)
        back(r, _mono(anchor - sum(a(i, h + 1) for i in range(prv + 1, r + 1)) + 1),
             base[:high - 1] + [(r, h)] + base[high:])
        for s in range(prv + 1, r):
            if a(s, h + 1) > 0:
                back(r, _mono(xi_prime(r) - sum(a(i, h + 1) for i in range(s + 1, r + 1)) + 1),
                     base[:high - 1] + [(s, h + 1), (r, h)] + base[high:])
    else:
        if low != high + 1:
            raise MalformedDelta('columns {} and {} are not adjacent in {}'.format(h + 1, h, x.delta))
        r, r2, prv2 = x.row_of(low), x.row_of(high), x.row_of(high - 1)
        for p in range(1, n + 1):
            if a(p, h + 1) >= 1:
                if r2 < p < r:
                    back(p, _mono(xi_prime(p) - 1) * _bracket(a(p, h) + 1))
                elif p == r:
                    exponent = xi(p) - 1 if 'right-F-h-xi-prime' in literal else xi_prime(p) - 1
                    back(p, _mono(exponent) * _bracket(a(r, h)))
                else:
                    back(p, _mono(xi_prime(p)) * _bracket(a(p, h) + 1))
        factor = ONE_MINUS_V2 * _bracket(a(r2, h) + 1)
        back(r2, _mono(xi_prime(r2) - sum(a(i, h + 1) for i in range(prv2 + 1, r2 + 1)) + 1) * factor,
             base[:high - 1] + base[high:])
        for s in range(prv2 + 1, r2):
            if a(s, h + 1) > 0:
                tail = sum(a(i, h + 1) for i in range(s + 1, r2 + 1))
                if 'right-F-h-last' in literal:
                    exponent = xi(r2) - tail - 1
                else:
                    exponent = xi_prime(r2) - tail + 1
                back(r2, _mono(exponent) * factor, base[:high - 1] + [(s, h + 1)] + base[high:])
    return terms.out


def right_terms(x, token, literal=frozenset()):
    """Expansion of [x] * token from the printed right-hand case formulas."""

    if token.kind in (TokenKind.HPLUS, TokenKind.HMINUS):
        return _right_h(x, token)
    if token.kind is TokenKind.L:
        return _right_l(x)
    if token.kind is TokenKind.E:
        return _right_e(x, token.index, literal)
    return _right_f(x, token.index, literal)


def act_right_printed(element, token, literal=frozenset()):
    """element * token from the printed right-hand formulas, corrected unless listed in literal."""

    token.validate(element.context.m)
    literal = check_literal(literal)
    pieces = []
    for x, coefficient in element.items():
        pieces.extend((y, coefficient * c) for y, c in right_terms(x, token, literal))
    return _collect(element.context, pieces)


def act_word(word, element):
    """Applies a word of (Side, GeneratorToken) pairs.

    Note:
        The word reads as an operator product, so its last letter acts first. A left letter t sends
        y to t * y and a right letter sends y to y * t; left and right letters commute.
    """

    for side, token in reversed(list(word)):
        if side is Side.LEFT:
            element = act_left(token, element)
        elif side is Side.RIGHT:
            element = act_right(element, token)
        else:
            raise ValueError('unknown side {!r}'.format(side))
    return element


def act_algebra_word(side, tokens, element):
    """Action of the algebra product t_1 t_2 ... t_k on one side.

    On the left this is t_1 * (t_2 * (... * element)); on the right ((element * t_1) * t_2) * ...
    """

    tokens = list(tokens)
    if side is Side.LEFT:
        for token in reversed(tokens):
            element = act_left(token, element)
    else:
        for token in tokens:
            element = act_right(element, token)
    return element
