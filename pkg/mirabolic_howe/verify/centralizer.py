"""Double centralizer check at rational specializations of v.

At each sample v the left tokens and the right tokens generate two matrix algebras on the
module. Each algebra is built by word-span saturation; each commutant is the solution space
of the commutation equations with the other side's generators. The double centralizer
property asks dim(left algebra) = dim(commutant of the right algebra) and symmetrically.
"""
import logging
from fractions import Fraction

from mirabolic_howe.algebra.decorated import enumerate_decorated, marginals
from mirabolic_howe.algebra.module import Context, Side, TokenKind, tokens_for
from mirabolic_howe.errors import SampleDegenerate
from mirabolic_howe.optimize.config import DEFAULT_SAMPLES
from mirabolic_howe.utils.helpers import timeit_decor
from mirabolic_howe.utils.linalg import EchelonBasis, axpy
from mirabolic_howe.verify.operators import token_operator
from mirabolic_howe.verify.report import CheckResult

logger = logging.getLogger(__name__)


def specialized_generators(context, side, value, basis):
    """Token operators of one side at v = value, as column dicts index -> {row index: Fraction}."""

    index = {x: k for k, x in enumerate(basis)}
    generators = []
    for token in tokens_for(context.n if side is Side.LEFT else context.m):
        operator = token_operator(context, side, token, basis)
        columns = {}
        for x, image in operator.columns.items():
            column = {index[y]: c.evaluate(value) for y, c in image.items()}
            column = {i: c for i, c in column.items() if c}
            if column:
                columns[index[x]] = column
        generators.append((token, columns))
    return generators


def _multiply(columns, matrix):
    """T * M for T given by columns and M a dict (row, col) -> value."""
    product = {}
    for (k, j), value in matrix.items():
        for i, entry in columns.get(k, {}).items():
            key = (i, j)
            total = product.get(key, 0) + entry * value
            if total:
                product[key] = total
            else:
                product.pop(key, None)
    return product


def saturate(generators, size):
    """Dimension of the unital algebra spanned by all words in the generators.

    :param generators   : column dicts of the generating matrices
    :param size (int)   : matrix size
    :return             : list of dimensions after words of length 0, 1, 2, ... until two agree
    """

    basis = EchelonBasis()
    identity = {(i, i): Fraction(1) for i in range(size)}
    basis.add(identity)
    dims = [basis.rank]
    frontier = [identity]
    while frontier:
        fresh = []
        for matrix in frontier:
            for columns in generators:
                product = _multiply(columns, matrix)
                if basis.add(product):
                    fresh.append(product)
        dims.append(basis.rank)
        frontier = fresh
    return dims


def commutant_dimension(generators, blocks):
    """Dimension of {X : XT = TX for every generator T}.

    Note:
        X is restricted in advance to the pairs (y, x) with blocks[y] == blocks[x], the joint
        eigenspaces of the diagonal H operators, which is exactly the commutant of those.
    :param generators   : column dicts of the non-diagonal generators
    :param blocks       : block label per basis index
    """

    size = len(blocks)
    by_block = {}
    for i, label in enumerate(blocks):
        by_block.setdefault(label, []).append(i)
    unknowns = [(a, b) for members in by_block.values() for a in members for b in members]

    equations = EchelonBasis()
    for columns in generators:
        rows = {}
        for k, column in columns.items():
            for i, entry in column.items():
                rows.setdefault(i, {})[k] = entry
        system = {}
        for a, b in unknowns:
            for x, entry in rows.get(b, {}).items():
                axpy(system.setdefault((a, x), {}), entry, {(a, b): 1})
            for y, entry in columns.get(a, {}).items():
                axpy(system.setdefault((y, b), {}), -entry, {(a, b): 1})
        for equation in system.values():
            if equation:
                equations.add(equation)
    logger.debug('commutant on %d basis vectors: %d unknowns, rank %d', size, len(unknowns), equations.rank)
    return len(unknowns) - equations.rank


def identity_commutes(generators, size):
    """The identity matrix satisfies every commutation equation."""
    identity = {(i, i): Fraction(1) for i in range(size)}
    for columns in generators:
        left = _multiply(columns, identity)
        right = {(i, k): v for k, column in columns.items() for i, v in column.items()}
        if left != right:
            return False
    return True


def _sample_dimensions(context, value, basis):
    left = specialized_generators(context, Side.LEFT, value, basis)
    right = specialized_generators(context, Side.RIGHT, value, basis)
    size = len(basis)
    row_blocks = [marginals(x)[0] for x in basis]
    col_blocks = [marginals(x)[1] for x in basis]
    diagonal = (TokenKind.HPLUS, TokenKind.HMINUS)
    left_span = saturate([columns for _, columns in left], size)
    right_span = saturate([columns for _, columns in right], size)
    return {
        'left_algebra': left_span[-1],
        'right_algebra': right_span[-1],
        'left_commutant': commutant_dimension([c for t, c in left if t.kind not in diagonal], row_blocks),
        'right_commutant': commutant_dimension([c for t, c in right if t.kind not in diagonal], col_blocks),
        'left_saturation': left_span,
        'right_saturation': right_span,
    }


def check_samples(samples):
    samples = [Fraction(value) for value in samples]
    if not samples:
        raise ValueError('the centralizer check needs at least one sample of v')
    for value in samples:
        if value in (0, 1, -1):
            raise ValueError('v samples must avoid 0 and +-1, got {}'.format(value))
    return samples


@timeit_decor
def centralizer_report(n, m, d, v_samples=DEFAULT_SAMPLES, outside_hypothesis=False):
    """Double centralizer dimensions at each rational sample of v.

    :param n, m, d (int)            : module context; the theorem needs n >= m >= d
    :param v_samples                : rationals avoiding 0 and +-1
    :param outside_hypothesis       : computes contexts violating n >= m >= d, labeled as such
    :return (CheckResult)           : passed when both equalities hold at every sample
    :raises SampleDegenerate        : the dimensions differ between samples
    """

    if not n >= m >= d and not outside_hypothesis:
        raise ValueError('the double centralizer check needs n >= m >= d, got ({}, {}, {})'.format(n, m, d))
    samples = check_samples(v_samples)
    context = Context(n, m, d)
    basis = enumerate_decorated(n, m, d)

    per_sample = {}
    for value in samples:
        per_sample[str(value)] = _sample_dimensions(context, value, basis)
        logger.debug('centralizer %s at v=%s: %s', context, value, per_sample[str(value)])

    keys = ('left_algebra', 'right_algebra', 'left_commutant', 'right_commutant')
    signatures = {tuple(dims[key] for key in keys) for dims in per_sample.values()}
    if len(signatures) > 1:
        raise SampleDegenerate('centralizer dimensions at {} differ between samples: {}'.format(
            context, {v: {key: dims[key] for key in keys} for v, dims in per_sample.items()}))

    dims = next(iter(per_sample.values()))
    passed = dims['left_algebra'] == dims['right_commutant'] and dims['right_algebra'] == dims['left_commutant']
    details = {'samples': [str(value) for value in samples], 'module_dimension': len(basis),
               'dimensions': {key: dims[key] for key in keys}}
    if not n >= m >= d:
        details['label'] = 'outside theorem hypothesis'
    counterexample = None if passed else {'dimensions': details['dimensions']}
    return CheckResult('centralizer', context.as_tuple(), passed, counterexample, details)
