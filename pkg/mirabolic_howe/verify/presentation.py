"""Defining relations of the mirabolic quantum group checked as operator identities.

Abstract generators are written as symbols ('E', i), ('F', i), ('H', a), ('Hinv', a) and ('L',).
A token map realizes each symbol as a generator token of the Schur algebra; on the left a
product g_1 ... g_k acts as g_1 * (... * (g_k * x)), on the right as ((x * g_1) * ...) * g_k.
"""
import logging
from collections import namedtuple

from mirabolic_howe.algebra.corrections import check_literal
from mirabolic_howe.algebra.decorated import enumerate_decorated
from mirabolic_howe.algebra.laurent import V, V_INV, LaurentPolynomial, lp_exact_divide
from mirabolic_howe.algebra.module import Context, GeneratorToken, ModuleElement, Side, TokenKind
from mirabolic_howe.errors import NotDivisible
from mirabolic_howe.utils.helpers import timeit_decor
from mirabolic_howe.verify.operators import OperatorMatrix, algebra_size, identity_operator, token_operator
from mirabolic_howe.verify.report import RelationReport

logger = logging.getLogger(__name__)

ONE = LaurentPolynomial.one()
V_PLUS_V_INV = V + V_INV
V_MINUS_V_INV = V - V_INV

Relation = namedtuple('Relation', ['relation_id', 'lhs', 'rhs', 'divide_rhs'])
Relation.__doc__ = """lhs and rhs are lists of (coefficient, word); divide_rhs divides the rhs by (v - v^-1)."""


def _e(i):
    return ('E', i)


def _f(i):
    return ('F', i)


def _h(a):
    return ('H', a)


def _hinv(a):
    return ('Hinv', a)


L = ('L',)


def _kronecker(a, b):
    return 1 if a == b else 0


def relations(size, literal=frozenset()):
    """Every instance of every defining relation for the algebra on `size` generators."""

    literal = check_literal(literal)
    out = []
    indices = range(1, size)
    weights = range(1, size + 1)

    for a in weights:
        out.append(Relation('H-inverse(a={})'.format(a), [(ONE, [_h(a), _hinv(a)])], [(ONE, [])], False))
        for b in weights:
            if a < b:
                out.append(Relation('H-commute(a={},b={})'.format(a, b), [(ONE, [_h(a), _h(b)])],
                                    [(ONE, [_h(b), _h(a)])], False))

    for i in indices:
        for j in indices:
            if abs(i - j) == 1:
                for name, g in (('E', _e), ('F', _f)):
                    out.append(Relation('{}-serre(i={},j={})'.format(name, i, j),
                                        [(ONE, [g(i), g(i), g(j)]), (ONE, [g(j), g(i), g(i)])],
                                        [(V_PLUS_V_INV, [g(i), g(j), g(i)])], False))
            elif abs(i - j) > 1 and i < j:
                for name, g in (('E', _e), ('F', _f)):
                    out.append(Relation('{}-far-commute(i={},j={})'.format(name, i, j), [(ONE, [g(i), g(j)])],
                                        [(ONE, [g(j), g(i)])], False))

    for a in weights:
        for i in indices:
            shift = _kronecker(a, i) - _kronecker(a, i + 1)
            out.append(Relation('HE(a={},i={})'.format(a, i), [(ONE, [_h(a), _e(i)])],
                                [(LaurentPolynomial.monomial(shift), [_e(i), _h(a)])], False))
            out.append(Relation('HF(a={},i={})'.format(a, i), [(ONE, [_h(a), _f(i)])],
                                [(LaurentPolynomial.monomial(-shift), [_f(i), _h(a)])], False))

    for i in indices:
        for j in indices:
            rhs = []
            if i == j:
                rhs = [(ONE, [_h(i), _hinv(i + 1)]), (-ONE, [_hinv(i), _h(i + 1)])]
            out.append(Relation('EF(i={},j={})'.format(i, j), [(ONE, [_e(i), _f(j)]), (-ONE, [_f(j), _e(i)])],
                                rhs, True))

    for a in weights:
        out.append(Relation('HL(a={})'.format(a), [(ONE, [_h(a), L])], [(ONE, [L, _h(a)])], False))
    out.append(Relation('L-idempotent', [(ONE, [L, L])], [(ONE, [L])], False))

    for i in indices:
        out.append(Relation('LE-absorb(i={})'.format(i), [(ONE, [L, _e(i)])], [(ONE, [L, _e(i), L])], False))
        if 'presentation-LF-order' in literal:
            lhs = [(ONE, [L, _f(i)])]
        else:
            lhs = [(ONE, [_f(i), L])]
        out.append(Relation('LF-absorb(i={})'.format(i), lhs, [(ONE, [L, _f(i), L])], False))
        out.append(Relation('ELE(i={})'.format(i), [(V_PLUS_V_INV, [_e(i), L, _e(i)])],
                            [(V_INV, [_e(i), _e(i), L]), (V, [L, _e(i), _e(i)])], False))
        out.append(Relation('FLF(i={})'.format(i), [(V_PLUS_V_INV, [_f(i), L, _f(i)])],
                            [(V, [_f(i), _f(i), L]), (V_INV, [L, _f(i), _f(i)])], False))
    return out


def token_map(literal=frozenset()):
    """Realization of the abstract symbols as generator tokens.

    Note:
        The realized H_a^+ acts by v^{-(row sum)}, so the abstract H_a is sent to H_a^- and its
        inverse to H_a^+. With 'presentation-H-sign' in literal the signs are taken as printed.
    """

    printed = 'presentation-H-sign' in check_literal(literal)
    h_kind, hinv_kind = (TokenKind.HPLUS, TokenKind.HMINUS) if printed else (TokenKind.HMINUS, TokenKind.HPLUS)

    def realize(symbol):
        if symbol[0] == 'E':
            return GeneratorToken(TokenKind.E, symbol[1])
        if symbol[0] == 'F':
            return GeneratorToken(TokenKind.F, symbol[1])
        if symbol[0] == 'H':
            return GeneratorToken(h_kind, symbol[1])
        if symbol[0] == 'Hinv':
            return GeneratorToken(hinv_kind, symbol[1])
        if symbol[0] == 'L':
            return GeneratorToken(TokenKind.L)
        raise ValueError('unknown generator symbol {!r}'.format(symbol))

    return realize


class WordEvaluator(object):
    """Caches the token operators of one side and evaluates algebra words as operators."""

    def __init__(self, context, side, realize):
        self.context = context
        self.side = side
        self.realize = realize
        self.basis = enumerate_decorated(*context.as_tuple())
        self.identity = identity_operator(context, self.basis)
        self._tokens = {}

    def token(self, symbol):
        if symbol not in self._tokens:
            self._tokens[symbol] = token_operator(self.context, self.side, self.realize(symbol), self.basis)
        return self._tokens[symbol]

    def word(self, symbols):
        operator = self.identity
        ordered = reversed(symbols) if self.side is Side.LEFT else symbols
        for symbol in ordered:
            operator = self.token(symbol).compose(operator)
        return operator

    def combination(self, terms):
        total = OperatorMatrix(self.context, {})
        for coefficient, symbols in terms:
            total = total + self.word(symbols).scale(coefficient)
        return total


def divide_operator(operator, divisor):
    """Divides every coefficient of the operator exactly; NotDivisible propagates."""
    columns = {}
    for x, image in operator.columns.items():
        columns[x] = ModuleElement(operator.context, {y: lp_exact_divide(c, divisor) for y, c in image.items()})
    return OperatorMatrix(operator.context, columns)


def relation_residual(evaluator, relation):
    """lhs - rhs as an operator; None when the divided rhs is not exact."""
    lhs = evaluator.combination(relation.lhs)
    rhs = evaluator.combination(relation.rhs)
    if relation.divide_rhs:
        try:
            rhs = divide_operator(rhs, V_MINUS_V_INV)
        except NotDivisible as error:
            logger.warning('relation %s: %s', relation.relation_id, error)
            return None
    return lhs - rhs


def _not_divisible_residual(evaluator, relation):
    """Residual reported for a commutator relation whose rhs does not divide: lhs times (v - v^-1) - rhs."""
    lhs = evaluator.combination(relation.lhs).scale(V_MINUS_V_INV)
    return lhs - evaluator.combination(relation.rhs)


@timeit_decor
def verify_presentation(n, m, d, side=Side.LEFT, literal=frozenset()):
    """Checks every defining relation instance on MV_{n|m,d}.

    :param n, m, d (int)        : module context
    :param side (Side)          : LEFT checks the algebra of size n, RIGHT the algebra of size m
    :param literal (set)        : correction ids evaluated as printed
    :return                     : list of RelationReport, one per relation instance
    """

    context = Context(n, m, d)
    side = Side(side)
    literal = check_literal(literal)
    evaluator = WordEvaluator(context, side, token_map(literal))
    reports = []
    for relation in relations(algebra_size(context, side), literal):
        residual = relation_residual(evaluator, relation)
        if residual is None:
            residual = _not_divisible_residual(evaluator, relation)
        report = RelationReport(relation.relation_id, context.as_tuple(), side.value, residual)
        if not report.passed:
            logger.info('relation %s fails on the %s at %s', relation.relation_id, side.value, context)
        reports.append(report)
    logger.debug('presentation %s %s: %d relation instances', side.value, context, len(reports))
    return reports
