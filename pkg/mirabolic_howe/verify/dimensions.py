"""Three-way dimension check: closed formula, basis enumeration and orbit count over F_q."""
import logging

from mirabolic_howe.algebra.decorated import dimension_count, enumerate_decorated
from mirabolic_howe.oracle.orbits import build_orbit_table, triple_count
from mirabolic_howe.verify.report import CheckResult

logger = logging.getLogger(__name__)


def verify_dimensions(n, m, d, q_list=(), budget=None):
    """dimension_count = |enumerate_decorated| = number of orbits at every q, and orbit sizes sum
    to the number of triples.

    :param q_list       : field sizes for the orbit count; empty compares formula and enumeration only
    :return             : CheckResult
    """

    formula = dimension_count(n, m, d)
    enumerated = len(enumerate_decorated(n, m, d))
    orbits, sizes = {}, {}
    for q in q_list:
        table = build_orbit_table(n, m, d, q, budget)
        orbits[str(q)] = len(table)
        sizes[str(q)] = table.total() == triple_count(n, m, d, q)
    passed = formula == enumerated and all(count == formula for count in orbits.values()) and all(sizes.values())
    details = {'formula': formula, 'enumeration': enumerated}
    if q_list:
        details['orbits'] = orbits
        details['orbit_sizes_sum_to_triples'] = sizes
    if not passed:
        logger.info('dimension mismatch at (%d,%d,%d): %s', n, m, d, details)
    return CheckResult('dimensions', (n, m, d), passed, None if passed else dict(details), details)
