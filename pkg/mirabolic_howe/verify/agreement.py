"""Agreement of the symbolic action with brute-force convolution over F_q, and calibration
of the normalization convention that links the two.

The symbolic action is written in the basis [A]_Delta = v^{w(A,Delta)} e_(A,Delta). For a
generator g with g * [z] = sum_y c_y [y] the e-basis expansion is

    g * e_z = sum_y c_y v^{w(y) - w(z)} e_y,

and likewise on the right. The oracle computes the same expansion from orbit counts; both
sides are compared after v = sqrt(q).
"""
import logging
from collections import namedtuple

from mirabolic_howe.algebra.action import act_left, act_right_by_transpose
from mirabolic_howe.algebra.decorated import DEFAULT_CONVENTION, Convention, enumerate_decorated, marginals, \
    weight_exponent
from mirabolic_howe.algebra.generators import generator_components
from mirabolic_howe.algebra.laurent import LaurentPolynomial, specialize_v2
from mirabolic_howe.algebra.module import Context, ModuleElement, Side, tokens_for
from mirabolic_howe.errors import AmbiguousConvention, NoConsistentConvention
from mirabolic_howe.optimize.config import max_work
from mirabolic_howe.optimize.multi_process import ParallelMap
from mirabolic_howe.oracle.convolution import oracle_generator_action
from mirabolic_howe.oracle.orbits import check_budget
from mirabolic_howe.utils.helpers import timeit_decor
from mirabolic_howe.verify.report import CheckResult

logger = logging.getLogger(__name__)

Calibration = namedtuple('Calibration', ['chosen', 'matching', 'evidence', 'ambiguous'])


def to_e_basis(element, convention=DEFAULT_CONVENTION):
    """Coefficients of the element in the e-basis: c [x] -> c v^{w(x)} e_x."""
    return {x: c.shift(weight_exponent(x, convention)) for x, c in element.items()}


def symbolic_e_expansion(token, z, side, convention=DEFAULT_CONVENTION):
    """e-basis expansion of g * e_z (left) or e_z * g (right) from the symbolic action."""

    element = ModuleElement.basis(z)
    if side is Side.LEFT:
        image = act_left(token, element)
    else:
        image = act_right_by_transpose(element, token, convention)
    shift = -weight_exponent(z, convention)
    return {y: c.shift(shift) for y, c in to_e_basis(image, convention).items()}


def parity_reference(token, z, side, convention=DEFAULT_CONVENTION):
    """Exponent of the scalar of the leading generator summand; None when the token kills z.

    Structure constants of e-basis products are orbit counts, so after removing this scalar an
    agreeing expansion has only even exponents.
    """

    row_sums, col_sums = marginals(z)
    components = generator_components(token, row_sums if side is Side.LEFT else col_sums, side)
    if not components:
        return None
    component, coefficient = components[0]
    return weight_exponent(component, convention) + coefficient.min_exponent


def parity_ok(expansion, reference):
    if reference is None:
        return not expansion
    return all((exponent - reference) % 2 == 0 for c in expansion.values() for exponent, _ in c.terms())


def _compare(symbolic, oracle, q):
    """Outputs y on which the two expansions differ at v = sqrt(q)."""
    zero = LaurentPolynomial.zero()
    differing = []
    for y in sorted(set(symbolic) | set(oracle), key=lambda key: key.sort_key()):
        if specialize_v2(symbolic.get(y, zero), q) != specialize_v2(oracle.get(y, zero), q):
            differing.append(y)
    return differing


def _expansion_json(expansion):
    return [{'basis': y.to_json(), 'coeff': c.to_json()}
            for y, c in sorted(expansion.items(), key=lambda item: item[0].sort_key())]


def compare_column(job):
    """All divergences for one basis element z over every token of both sides.

    :param job      : (z, q, convention value, budget, sides)
    :return         : list of divergence dicts in canonical order
    """

    z, q, convention, budget, sides = job
    convention = Convention(convention)
    divergences = []
    for side in sides:
        side = Side(side)
        size = z.n if side is Side.LEFT else z.m
        for token in tokens_for(size):
            symbolic = symbolic_e_expansion(token, z, side, convention)
            oracle = oracle_generator_action(token, z, q, side, convention, budget)
            differing = _compare(symbolic, oracle, q)
            parity = parity_ok(symbolic, parity_reference(token, z, side, convention))
            if differing or not parity:
                divergences.append({'side': side.value, 'token': str(token), 'basis': z.to_json(), 'q': q,
                                    'outputs': [y.to_json() for y in differing], 'parity': parity,
                                    'symbolic': _expansion_json(symbolic), 'oracle': _expansion_json(oracle)})
    return divergences


def agreement_divergences(n, m, d, q, convention=DEFAULT_CONVENTION, budget=None, workers=1,
                          sides=(Side.LEFT, Side.RIGHT)):
    check_budget(n, m, d, q, budget)
    jobs = [(z, q, Convention(convention).value, max_work(budget), tuple(Side(s).value for s in sides))
            for z in enumerate_decorated(n, m, d)]
    divergences = []
    for column in ParallelMap(workers)(compare_column, jobs):
        divergences.extend(column)
    return divergences


@timeit_decor
def verify_oracle_agreement(n, m, d, q, convention=DEFAULT_CONVENTION, budget=None, workers=1):
    """Every left and right generator on every basis element against the convolution oracle.

    Note:
        A divergence is a failed result, not an exception. The counterexample is the first
        divergence in canonical order, with both expansions.
    :return (CheckResult)   : passed when no basis element diverges and every parity check holds
    """

    context = Context(n, m, d)
    divergences = agreement_divergences(n, m, d, q, convention, budget, workers)
    details = {'convention': Convention(convention).value, 'q': q, 'divergences': len(divergences)}
    if divergences:
        logger.info('oracle agreement %s q=%d: %d divergences', context, q, len(divergences))
    return CheckResult('oracle-agreement:q={}'.format(q), context.as_tuple(), not divergences,
                       divergences[0] if divergences else None, details)


@timeit_decor
def calibrate_normalization(n, m, d, q_list, candidates=tuple(Convention), budget=None, workers=1, sink=None):
    """Selects the normalization convention under which symbolic and oracle actions agree.

    :param q_list           : field sizes to compare at
    :param candidates       : conventions to try
    :param sink (Logger)    : optional event sink for the per-candidate mismatch counts
    :return (Calibration)   : chosen convention, matching set, evidence {candidate: {q: mismatches}}
    :raises NoConsistentConvention: no candidate matches everywhere
    :raises AmbiguousConvention: several match and the default is not among them
    """

    q_list = list(q_list)
    if not q_list:
        raise ValueError('calibration needs at least one field size')
    if len(q_list) < 2:
        logger.warning('calibrating (%d,%d,%d) at a single field size q=%d', n, m, d, q_list[0])
    evidence = {}
    for candidate in candidates:
        candidate = Convention(candidate)
        evidence[candidate.value] = {}
        for q in q_list:
            mismatches = len(agreement_divergences(n, m, d, q, candidate, budget, workers))
            evidence[candidate.value][str(q)] = mismatches
            if sink is not None:
                sink.scalar_summary('calibration/{}/({},{},{})'.format(candidate.value, n, m, d), mismatches, q)

    matching = [Convention(c) for c, counts in evidence.items() if not any(counts.values())]
    if not matching:
        raise NoConsistentConvention('no convention matches the oracle at ({},{},{}): {}'.format(n, m, d, evidence))
    if len(matching) == 1:
        return Calibration(matching[0], matching, evidence, False)
    if DEFAULT_CONVENTION in matching:
        logger.info('several conventions match at (%d,%d,%d); keeping %s', n, m, d, DEFAULT_CONVENTION.value)
        return Calibration(DEFAULT_CONVENTION, matching, evidence, True)
    raise AmbiguousConvention('conventions {} all match at ({},{},{})'.format([c.value for c in matching], n, m, d))


def calibration_result(n, m, d, q_list, calibration, expect_rejected=()):
    """CheckResult for a calibration; expect_rejected lists candidates that must show mismatches."""

    rejected = [c.value for c in Convention if c.value in calibration.evidence and Convention(c) not in
                calibration.matching]
    missing = [Convention(c).value for c in expect_rejected if Convention(c).value not in rejected]
    details = {'chosen': calibration.chosen.value, 'matching': [c.value for c in calibration.matching],
               'rejected': rejected, 'evidence': calibration.evidence, 'q': list(q_list)}
    counterexample = {'not_rejected': missing} if missing else None
    return CheckResult('calibration', (n, m, d), not missing, counterexample, details)
