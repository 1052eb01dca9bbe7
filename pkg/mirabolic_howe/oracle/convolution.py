"""Convolution structure constants computed by brute force over F_q.

The characteristic functions e_x of orbits multiply by

    (g1 * g2)(f, f', v) = sum over (f'', w) of g1(f, f'', w) g2(f'', f', v - w),

and the structure constant of e_x * e_y at e_z is the value of the product at any triple of
the orbit of z.
"""
import logging
from collections import Counter

from mirabolic_howe.algebra.decorated import DEFAULT_CONVENTION, marginals, weight_exponent
from mirabolic_howe.algebra.generators import generator_components
from mirabolic_howe.algebra.laurent import LaurentPolynomial
from mirabolic_howe.algebra.module import Side
from mirabolic_howe.errors import DimensionMismatch, NotDivisible
from mirabolic_howe.oracle.field import vector_space
from mirabolic_howe.oracle.flags import flags_with_composition
from mirabolic_howe.oracle.orbits import build_orbit_table, classify_fast, pair_lattice

logger = logging.getLogger(__name__)


def oracle_convolution_constant(x, y, z, q, representative=None, budget=None):
    """Coefficient of e_z in e_x * e_y over F_q.

    :param x (DecoratedMatrix)  : orbit on X_n x X_k x V
    :param y (DecoratedMatrix)  : orbit on X_k x X_m x V
    :param z (DecoratedMatrix)  : orbit on X_n x X_m x V
    :param q (int)              : field size
    :param representative       : optional triple (f, f', u) of the orbit of z
    :return (int)               : the number of (f'', w) splitting the representative
    """

    if x.m != y.n or x.n != z.n or y.m != z.m:
        raise DimensionMismatch('shapes {}x{}, {}x{}, {}x{} do not compose'.format(x.n, x.m, y.n, y.m, z.n, z.m))
    if not x.total == y.total == z.total:
        raise DimensionMismatch('totals {}, {}, {} differ'.format(x.total, y.total, z.total))

    d = z.total
    table = build_orbit_table(z.n, z.m, d, q, budget)
    ro_x, co_x = marginals(x)
    ro_y, co_y = marginals(y)
    ro_z, co_z = marginals(z)
    if ro_x != ro_z or co_x != ro_y or co_y != co_z:
        return 0

    first, second, code = representative if representative is not None else table.representative(z)
    space = vector_space(d, q)
    count = 0
    for middle in flags_with_composition(co_x, d, q):
        lattice = pair_lattice(first, middle)
        if lattice.entries != x.entries:
            continue
        decorations = lattice.decorations()
        for w in range(space.size):
            if decorations[w] == x.delta and classify_fast(middle, second, space.add(code, space.negate(w))) == y:
                count += 1
    return count


def oracle_component_counts(token, z, q, side=Side.LEFT, budget=None):
    """Structure constants of (summand of the generator) * e_z, or e_z * (summand), per summand.

    :return: list of (summand DecoratedMatrix, [.]-coefficient, {output: integer constant})
    """

    d = z.total
    table = build_orbit_table(z.n, z.m, d, q, budget)
    space = vector_space(d, q)
    row_sums, col_sums = marginals(z)
    result = []

    if side is Side.LEFT:
        middle, second, code = table.representative(z)
        components = generator_components(token, row_sums, Side.LEFT)
    else:
        first, middle, code = table.representative(z)
        components = generator_components(token, col_sums, Side.RIGHT)

    for component, coefficient in components:
        hits = Counter()
        component_rows, component_cols = marginals(component)
        if side is Side.LEFT:
            for first in flags_with_composition(component_rows, d, q):
                lattice = pair_lattice(first, middle)
                if lattice.entries != component.entries:
                    continue
                decorations = lattice.decorations()
                for w in range(space.size):
                    if decorations[w] == component.delta:
                        hits[classify_fast(first, second, space.add(code, w))] += 1
        else:
            for second in flags_with_composition(component_cols, d, q):
                lattice = pair_lattice(middle, second)
                if lattice.entries != component.entries:
                    continue
                decorations = lattice.decorations()
                for w in range(space.size):
                    if decorations[w] == component.delta:
                        hits[classify_fast(first, second, space.add(code, w))] += 1

        constants = {}
        for y, hit in hits.items():
            value, rest = divmod(table.size(z) * hit, table.size(y))
            if rest:
                raise NotDivisible('orbit count {} * {} is not divisible by {}'.format(table.size(z), hit,
                                                                                      table.size(y)))
            constants[y] = value
        result.append((component, coefficient, constants))
    return result


def oracle_generator_action(token, z, q, side=Side.LEFT, convention=DEFAULT_CONVENTION, budget=None):
    """e-basis expansion of (generator) * e_z on the left or e_z * (generator) on the right.

    Note:
        The generator is taken in the e-basis, so each summand [D] contributes with the scalar
        coefficient * v^{w(D)}. The orbit counts are integers at this q, so every output coefficient
        is an integer combination of these monomials.
    :return: dict output DecoratedMatrix -> LaurentPolynomial
    """

    expansion = {}
    for component, coefficient, constants in oracle_component_counts(token, z, q, side, budget):
        scalar = coefficient * LaurentPolynomial.monomial(weight_exponent(component, convention))
        for y, value in constants.items():
            expansion[y] = expansion.get(y, LaurentPolynomial.zero()) + scalar * value
    return {y: c for y, c in expansion.items() if not c.is_zero()}
