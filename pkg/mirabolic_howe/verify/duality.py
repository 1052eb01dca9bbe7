"""Transpose duality: the printed right-hand formulas against the right action derived from
the left one through (A, Delta) -> (A^t, Delta^t)."""
import logging

from mirabolic_howe.algebra import corrections
from mirabolic_howe.algebra.action import act_left, act_right, act_right_by_transpose, act_right_printed
from mirabolic_howe.algebra.decorated import enumerate_decorated
from mirabolic_howe.algebra.module import Context, ModuleElement, TokenKind, tokens_for
from mirabolic_howe.utils.helpers import timeit_decor
from mirabolic_howe.verify.report import CheckResult

logger = logging.getLogger(__name__)

RIGHT_TOKENS = {'right-F-g-xi': TokenKind.F, 'right-E-h-band': TokenKind.E, 'right-E-h-xi-index': TokenKind.E,
                'right-F-h-xi-prime': TokenKind.F, 'right-F-h-last': TokenKind.F}
LEFT_TOKENS = {'left-F-f-band': TokenKind.F, 'left-F-h-band': TokenKind.F}


def _first_difference(basis, tokens, first, second):
    """First (x, token) in canonical order where the two actions differ, and the count of such pairs."""
    found, count = None, 0
    for x in basis:
        element = ModuleElement.basis(x)
        for token in tokens:
            a, b = first(element, token), second(element, token)
            if a != b:
                count += 1
                if found is None:
                    found = {'basis': x.to_json(), 'token': str(token), 'first': a.to_json(), 'second': b.to_json()}
    return found, count


def correction_witnesses(n, m, d):
    """For each value-changing action correction, how many (basis element, token) pairs it changes at (n, m, d)."""

    basis = enumerate_decorated(n, m, d)
    witnesses = {}
    for correction_id, kind in sorted(RIGHT_TOKENS.items()):
        tokens = [t for t in tokens_for(m) if t.kind is kind]
        _, count = _first_difference(basis, tokens,
                                     lambda e, t: act_right_printed(e, t),
                                     lambda e, t, c=correction_id: act_right_printed(e, t, {c}))
        witnesses[correction_id] = count
    for correction_id, kind in sorted(LEFT_TOKENS.items()):
        tokens = [t for t in tokens_for(n) if t.kind is kind]
        _, count = _first_difference(basis, tokens,
                                     lambda e, t: act_left(t, e),
                                     lambda e, t, c=correction_id: act_left(t, e, {c}))
        witnesses[correction_id] = count
    return witnesses


@timeit_decor
def verify_duality(n, m, d, with_witnesses=True):
    """act_right, act_right_by_transpose and the corrected printed right formulas agree everywhere.

    :return (CheckResult)   : the corrections registry and their witness counts are in the details
    """

    context = Context(n, m, d)
    basis = enumerate_decorated(n, m, d)
    tokens = tokens_for(m)
    derived, derived_count = _first_difference(basis, tokens, act_right, act_right_by_transpose)
    printed, printed_count = _first_difference(basis, tokens, act_right_by_transpose,
                                               lambda e, t: act_right_printed(e, t))
    details = {'corrections': corrections.as_json(), 'mismatches': derived_count + printed_count}
    if with_witnesses:
        details['witnesses'] = correction_witnesses(n, m, d)
    if printed is not None:
        logger.info('printed right action differs from the transpose at %s on %d pairs', context, printed_count)
    return CheckResult('duality', context.as_tuple(), derived is None and printed is None, derived or printed,
                       details)
