"""Commutation of the left MS_{n,d}-action with the right MS_{m,d}-action."""
import logging

from mirabolic_howe.algebra.decorated import enumerate_decorated
from mirabolic_howe.algebra.module import Context, Side, tokens_for
from mirabolic_howe.utils.helpers import timeit_decor
from mirabolic_howe.verify.operators import token_operator
from mirabolic_howe.verify.report import RelationReport

logger = logging.getLogger(__name__)


@timeit_decor
def verify_bimodule(n, m, d):
    """One report per (left token, right token) pair; the residual is the commutator of the operators."""

    context = Context(n, m, d)
    basis = enumerate_decorated(n, m, d)
    left = [(token, token_operator(context, Side.LEFT, token, basis)) for token in tokens_for(n)]
    right = [(token, token_operator(context, Side.RIGHT, token, basis)) for token in tokens_for(m)]
    reports = []
    for x, phi in left:
        for y, psi in right:
            residual = phi.compose(psi) - psi.compose(phi)
            reports.append(RelationReport('[{},{}]'.format(x, y), context.as_tuple(), 'both', residual))
    failed = sum(not report.passed for report in reports)
    if failed:
        logger.info('bimodule %s: %d of %d token pairs do not commute', context, failed, len(reports))
    return reports
