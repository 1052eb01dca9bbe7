import contextlib
import io
import json
import os
import random
import sys
import tempfile
import unittest
from fractions import Fraction
from unittest import mock

if __name__ == '__main__' and __package__ is None:
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))
    __package__ = "mirabolic_howe.utils"

from mirabolic_howe.algebra.action import act_algebra_word, act_left, act_right, act_word, transpose_element
from mirabolic_howe.algebra.corrections import check_literal
from mirabolic_howe.algebra.decorated import (Convention, DecoratedMatrix, diagonal, dimension_count,
                                              enumerate_decorated, marginals, transpose, weight_exponent)
from mirabolic_howe.algebra.generators import generator_element
from mirabolic_howe.algebra.laurent import (V, V_INV, LaurentPolynomial, SpecializedValue, format_laurent,
                                            gauss_bracket, lp_exact_divide, parse_laurent, specialize_v2)
from mirabolic_howe.algebra.module import Context, GeneratorToken, ModuleElement, Side, TokenKind
from mirabolic_howe.errors import DimensionMismatch, MalformedDelta, NotDivisible, ScaleExceeded
from mirabolic_howe.optimize.config import MAX_WORK_ENV, get_profile, max_work
from mirabolic_howe.optimize.multi_process import ParallelMap
from mirabolic_howe.optimize.performance import profile_time, start_monitoring
from mirabolic_howe.oracle.convolution import oracle_convolution_constant
from mirabolic_howe.oracle.field import (count_subspaces, random_invertible, subspace_algebra, subspace_from_vectors,
                                         vector_space, whole_space)
from mirabolic_howe.oracle.flags import Flag, enumerate_flags
from mirabolic_howe.oracle.orbits import (build_orbit_table, classify_fast, classify_triple, maximal_cells,
                                          minimal_lower_set, pair_lattice, triple_count)
from mirabolic_howe.runner.cli import main
from mirabolic_howe.runner.serialize import element_from_text, serialize_element
from mirabolic_howe.utils.helpers import elapsed_since, format_bytes
from mirabolic_howe.utils.linalg import EchelonBasis, rank
from mirabolic_howe.verify.agreement import calibrate_normalization, symbolic_e_expansion, verify_oracle_agreement
from mirabolic_howe.verify.bimodule import verify_bimodule
from mirabolic_howe.verify.centralizer import centralizer_report, check_samples, identity_commutes, \
    specialized_generators
from mirabolic_howe.verify.dimensions import verify_dimensions
from mirabolic_howe.verify.operators import OperatorMatrix, identity_operator, token_operator
from mirabolic_howe.verify.duality import correction_witnesses, verify_duality
from mirabolic_howe.verify.presentation import verify_presentation
from mirabolic_howe.verify.report import VerificationReport, canonical_json
from mirabolic_howe.visualize.logger import Logger

E1 = GeneratorToken(TokenKind.E, 1)
F1 = GeneratorToken(TokenKind.F, 1)
L = GeneratorToken(TokenKind.L)
HPLUS1 = GeneratorToken(TokenKind.HPLUS, 1)


def lp(terms):
    return LaurentPolynomial(terms)


def element(context, terms):
    return ModuleElement(context, terms)


class TestLaurent(unittest.TestCase):
    """Test for the laurent script."""

    def test_format_and_parse(self):
        p = lp({-2: 1, 0: 1})
        self.assertEqual(format_laurent(p), 'v^-2 + 1')
        self.assertEqual(format_laurent(lp({1: -3, 2: 2})), '-3*v + 2*v^2')
        self.assertEqual(format_laurent(LaurentPolynomial.zero()), '0')
        for q in (p, lp({1: -3, 2: 2}), lp({-3: -1, 0: 5, 4: 1}), LaurentPolynomial.zero()):
            self.assertEqual(parse_laurent(format_laurent(q)), q)

    def test_exact_divide(self):
        self.assertEqual(lp_exact_divide(lp({2: 1, -2: -1}), V - V_INV), V + V_INV)
        self.assertEqual(lp_exact_divide(LaurentPolynomial.zero(), V), LaurentPolynomial.zero())
        with self.assertRaises(NotDivisible):
            lp_exact_divide(V, LaurentPolynomial.constant(2))
        with self.assertRaises(NotDivisible):
            lp_exact_divide(V, LaurentPolynomial.zero())

    def test_gauss_bracket(self):
        self.assertEqual(gauss_bracket(2, 1), lp({-2: 1, 0: 1}))
        self.assertEqual(gauss_bracket(1, 1), LaurentPolynomial.one())
        self.assertTrue(gauss_bracket(0, 1).is_zero())
        self.assertEqual(gauss_bracket(4, 2), lp({0: 1, -2: 1, -4: 2, -6: 1, -8: 1}))
        with self.assertRaises(ValueError):
            gauss_bracket(-1, 1)

    def test_specialize(self):
        self.assertEqual(specialize_v2(lp({2: 1}), 2), SpecializedValue(Fraction(2), Fraction(0), 2))
        self.assertEqual(specialize_v2(V, 4), SpecializedValue(Fraction(2), Fraction(0), 4))
        value = specialize_v2(V + V_INV, 3)
        self.assertEqual(value.rational, 0)
        self.assertEqual(value.surd, Fraction(4, 3))
        for q in (1, 0, -2):
            with self.assertRaises(ValueError):
                specialize_v2(V, q)

    def random_polynomial(self, rng):
        return lp({rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(rng.randint(0, 4))})

    def test_ring_axioms(self):
        rng = random.Random(5)
        one, zero = LaurentPolynomial.one(), LaurentPolynomial.zero()
        for _ in range(50):
            a, b, c = (self.random_polynomial(rng) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * one, a)
            self.assertEqual(a + zero, a)
            self.assertTrue((a - a).is_zero())

    def test_gauss_bracket_shape(self):
        for n in range(1, 9):
            for t in range(1, n + 1):
                terms = gauss_bracket(n, t).terms()
                self.assertTrue(terms)
                for exponent, coefficient in terms:
                    self.assertLessEqual(exponent, 0)
                    self.assertEqual(exponent % 2, 0)
                    self.assertGreater(coefficient, 0)

    def test_specialize_multiplicative(self):
        rng = random.Random(9)
        for q in (2, 3, 4, 5):
            for _ in range(20):
                a, b = self.random_polynomial(rng), self.random_polynomial(rng)
                self.assertEqual(specialize_v2(a * b, q), specialize_v2(a, q) * specialize_v2(b, q))
                self.assertEqual(specialize_v2(a + b, q), specialize_v2(a, q) + specialize_v2(b, q))

    def test_arithmetic(self):
        self.assertEqual(V ** -2, LaurentPolynomial.monomial(-2))
        self.assertEqual((V + 1) * (V - 1), lp({2: 1, 0: -1}))
        self.assertEqual((V + V_INV).evaluate(2), Fraction(5, 2))
        self.assertEqual(LaurentPolynomial.from_json((V + 3).to_json()), V + 3)
        self.assertEqual(list((V_INV + 1).to_json()), ['-1', '0'])


class TestDecorated(unittest.TestCase):
    """Test for the decorated script."""

    def test_dimension_formula(self):
        self.assertEqual(dimension_count(2, 2, 2), 27)
        for n in range(1, 4):
            for m in range(1, 4):
                for d in range(4):
                    self.assertEqual(dimension_count(n, m, d), len(enumerate_decorated(n, m, d)))
        for d in range(1, 6):
            self.assertEqual(dimension_count(1, 1, d), 2)
        self.assertEqual(dimension_count(3, 2, 0), 1)

    def test_malformed_delta(self):
        with self.assertRaises(MalformedDelta):
            DecoratedMatrix(((1, 1), (1, 1)), ((1, 1), (2, 2)))
        with self.assertRaises(MalformedDelta):
            DecoratedMatrix(((0, 1),), ((1, 1),))
        with self.assertRaises(MalformedDelta):
            DecoratedMatrix(((1,),), ((2, 1),))
        with self.assertRaises(ValueError):
            DecoratedMatrix(((1, 0), (1,)))

    def test_label_and_transpose(self):
        x = DecoratedMatrix(((0, 2), (1, 0)), ((1, 2), (2, 1)))
        self.assertEqual(x.label(), '[[0,2],[1,0]]{(1,2),(2,1)}')
        self.assertEqual(DecoratedMatrix.from_label(x.label()), x)
        self.assertEqual(DecoratedMatrix.from_json(x.to_json()), x)
        self.assertEqual(transpose(transpose(x)), x)
        self.assertEqual(transpose(x).delta, ((1, 2), (2, 1)))
        self.assertEqual(marginals(x), ((2, 1), (1, 2)))

    def test_weight_exponent(self):
        decorated = diagonal((1,), ((1, 1),))
        self.assertEqual(weight_exponent(decorated), -1)
        self.assertEqual(weight_exponent(decorated, Convention.BLM_FLIPPED), 1)
        self.assertEqual(weight_exponent(diagonal((2, 1))), 0)
        x = DecoratedMatrix(((1, 1), (1, 0)))
        self.assertEqual(weight_exponent(x, Convention.AND_ORDERED), weight_exponent(x, Convention.AND_UNORDERED))

    def test_weight_exponent_sign(self):
        nonnegative = [c for c in Convention if c is not Convention.BLM_FLIPPED]
        for context in ((2, 2, 2), (3, 2, 3), (2, 3, 3)):
            for x in enumerate_decorated(*context):
                positive = sum(1 for row in x.entries for a in row if a > 0)
                if not x.delta and positive < 2:
                    continue
                for convention in nonnegative:
                    self.assertLessEqual(weight_exponent(x, convention), 0, msg=x.label())
                self.assertEqual(weight_exponent(x, Convention.BLM_FLIPPED), -weight_exponent(x))


class TestAction(unittest.TestCase):
    """Test for the action script."""

    def setUp(self):
        self.context = Context(2, 1, 1)
        self.x1 = DecoratedMatrix(((1,), (0,)))
        self.x2 = DecoratedMatrix(((0,), (1,)))
        self.x3 = DecoratedMatrix(((1,), (0,)), ((1, 1),))
        self.x4 = DecoratedMatrix(((0,), (1,)), ((2, 1),))

    def test_left_generators(self):
        b = ModuleElement.basis
        self.assertEqual(act_left(E1, b(self.x2)), b(self.x1))
        self.assertEqual(act_left(F1, b(self.x1)), b(self.x2))
        self.assertEqual(act_left(F1, b(self.x3)), b(self.x4))
        self.assertEqual(act_left(L, b(self.x4)), b(self.x4))
        self.assertEqual(act_left(L, b(self.x2)), b(self.x2))
        self.assertEqual(act_left(L, b(self.x1)), element(self.context, {self.x3: V_INV, self.x1: V ** -2}))
        self.assertEqual(act_left(HPLUS1, b(self.x1)), b(self.x1).scale(V_INV))
        self.assertTrue(act_left(E1, b(self.x1)).is_zero())

    def test_left_l_trivial_context(self):
        context = Context(1, 1, 1)
        empty = DecoratedMatrix(((1,),))
        decorated = DecoratedMatrix(((1,),), ((1, 1),))
        self.assertEqual(act_left(L, ModuleElement.basis(empty)),
                         element(context, {empty: V ** -2, decorated: V_INV}))
        self.assertEqual(act_left(L, ModuleElement.basis(decorated)),
                         element(context, {empty: V_INV - V ** -3, decorated: 1 - V ** -2}))

    def test_left_f_both_rows_decorated(self):
        x = DecoratedMatrix(((0, 2), (1, 0)), ((1, 2), (2, 1)))
        same = DecoratedMatrix(((0, 1), (1, 1)), ((1, 2), (2, 1)))
        moved = DecoratedMatrix(((0, 1), (1, 1)), ((2, 2),))
        context = Context(2, 2, 3)
        self.assertEqual(act_left(F1, ModuleElement.basis(x)), element(context, {same: 1, moved: V - V_INV}))
        self.assertEqual(act_left(F1, ModuleElement.basis(x), {'left-F-h-band'}),
                         element(context, {same: V, moved: V - V_INV}))

    def test_right_generators(self):
        x = DecoratedMatrix(((1, 0),))
        y = DecoratedMatrix(((0, 1),))
        self.assertEqual(act_right(ModuleElement.basis(x), E1), ModuleElement.basis(y))
        self.assertTrue(act_right(ModuleElement.basis(x), F1).is_zero())

    def test_words(self):
        b = ModuleElement.basis
        self.assertEqual(act_algebra_word(Side.LEFT, [E1, F1], b(self.x1)), b(self.x1))
        self.assertTrue(act_algebra_word(Side.LEFT, [F1, E1], b(self.x1)).is_zero())
        x = DecoratedMatrix(((1, 0),))
        self.assertEqual(act_algebra_word(Side.RIGHT, [E1, F1], ModuleElement.basis(x)), ModuleElement.basis(x))

    def test_mixed_words(self):
        b = ModuleElement.basis
        self.assertEqual(act_word([(Side.LEFT, E1), (Side.LEFT, F1)], b(self.x1)), b(self.x1))
        for x in enumerate_decorated(2, 2, 2):
            expected = act_left(E1, act_right(b(x), F1))
            self.assertEqual(act_word([(Side.LEFT, E1), (Side.RIGHT, F1)], b(x)), expected)
            self.assertEqual(act_word([(Side.RIGHT, F1), (Side.LEFT, E1)], b(x)), expected)

    def test_right_is_mirrored_left(self):
        for x in enumerate_decorated(2, 2, 2):
            flipped = transpose_element(ModuleElement.basis(x))
            for token in (E1, F1, L, HPLUS1):
                self.assertEqual(act_right(ModuleElement.basis(x), token),
                                 transpose_element(act_left(token.mirrored(), flipped)))

    def test_token_validation(self):
        with self.assertRaises(ValueError):
            act_left(GeneratorToken(TokenKind.E, 2), ModuleElement.basis(self.x1))
        self.assertEqual(GeneratorToken.parse('H+2'), GeneratorToken(TokenKind.HPLUS, 2))
        self.assertEqual(str(GeneratorToken.parse('L')), 'L')
        with self.assertRaises(ValueError):
            GeneratorToken.parse('K1')

    def test_mixed_contexts(self):
        with self.assertRaises(DimensionMismatch):
            ModuleElement.basis(self.x1) + ModuleElement.basis(DecoratedMatrix(((1,),)))


class TestGenerators(unittest.TestCase):
    """Test for the generators and corrections scripts."""

    def test_l_generator(self):
        expected = element(Context(1, 1, 1), {diagonal((1,)): V ** -2, diagonal((1,), ((1, 1),)): V_INV})
        self.assertEqual(generator_element(L, 1, 1), expected)

    def test_e_generator(self):
        generator = generator_element(E1, 2, 1)
        self.assertEqual(generator.support(), [DecoratedMatrix(((0, 1), (0, 0)))])

    def test_unknown_correction(self):
        with self.assertRaises(ValueError):
            check_literal(['not-a-correction'])
        self.assertEqual(check_literal(None), frozenset())


class TestPresentation(unittest.TestCase):
    """Test for the presentation script."""

    def assertAllPass(self, reports):
        failed = [report.relation_id for report in reports if not report.passed]
        self.assertEqual(failed, [])

    def test_operator_algebra(self):
        context = Context(2, 1, 1)
        basis = enumerate_decorated(2, 1, 1)
        e = token_operator(context, Side.LEFT, E1, basis)
        f = token_operator(context, Side.LEFT, F1, basis)
        word = OperatorMatrix.from_word(context, Side.LEFT, [E1, F1], basis)
        self.assertEqual(e.compose(f).columns, word.columns)
        self.assertEqual(identity_operator(context, basis).compose(e).columns, e.columns)
        self.assertTrue((e - e).is_zero())
        x2 = ModuleElement.basis(DecoratedMatrix(((0,), (1,))))
        self.assertEqual(e.scale(V).apply(x2), act_left(E1, x2).scale(V))
        self.assertIsNotNone(e.first_nonzero())

    def test_trivial_context(self):
        reports = verify_presentation(1, 1, 1)
        self.assertAllPass(reports)
        self.assertIn('L-idempotent', [report.relation_id for report in reports])

    def test_left_and_right(self):
        self.assertAllPass(verify_presentation(2, 1, 1))
        self.assertAllPass(verify_presentation(2, 2, 2, Side.LEFT))
        self.assertAllPass(verify_presentation(2, 2, 2, Side.RIGHT))

    def test_printed_h_sign_fails(self):
        reports = {r.relation_id: r for r in verify_presentation(2, 1, 1, literal={'presentation-H-sign'})}
        self.assertFalse(reports['EF(i=1,j=1)'].passed)

    def test_printed_lf_order_fails(self):
        reports = {r.relation_id: r for r in verify_presentation(2, 1, 1, literal={'presentation-LF-order'})}
        self.assertFalse(reports['LF-absorb(i=1)'].passed)
        self.assertTrue(reports['LE-absorb(i=1)'].passed)


class TestBimodule(unittest.TestCase):
    """Test for the bimodule and duality scripts."""

    def test_commute(self):
        for context in ((1, 1, 1), (2, 2, 2)):
            reports = verify_bimodule(*context)
            self.assertTrue(all(report.passed for report in reports))
        self.assertEqual(len(verify_bimodule(2, 2, 2)), 49)

    def test_duality(self):
        result = verify_duality(2, 2, 2, with_witnesses=False)
        self.assertTrue(result.passed, msg=result.counterexample)
        self.assertIn('right-E-h-band', [c['id'] for c in result.details['corrections']])

    def test_duality_split_decorations(self):
        result = verify_duality(3, 3, 3)
        self.assertTrue(result.passed, msg=result.counterexample)
        self.assertEqual(result.details['mismatches'], 0)
        witnesses = result.details['witnesses']
        self.assertGreater(witnesses['right-F-h-last'], 0)
        self.assertGreater(witnesses['right-E-h-xi-index'], 0)
        self.assertGreater(correction_witnesses(3, 2, 3)['right-F-h-last'], 0)
        self.assertTrue(verify_duality(3, 2, 3, with_witnesses=False).passed)


class TestOracle(unittest.TestCase):
    """Test for the field, flags, orbits and convolution scripts."""

    def test_count_subspaces(self):
        for d in range(4):
            for k in range(1, d + 1):
                for q in (2, 3):
                    bracket = specialize_v2(gauss_bracket(d, k).substitute_inverse(), q)
                    self.assertEqual(count_subspaces(d, k, q), bracket.rational)
        self.assertEqual(count_subspaces(3, 1, 2), 7)

    def test_subspace_algebra(self):
        first = subspace_from_vectors([[1, 0]], 2, 2)
        second = subspace_from_vectors([[0, 1]], 2, 2)
        self.assertEqual(subspace_algebra('intersect', first, second).dim, 0)
        self.assertEqual(subspace_algebra('sum', first, second), whole_space(2, 2))
        self.assertTrue(subspace_algebra('contains', whole_space(2, 2), first))
        self.assertFalse(subspace_algebra('contains', first, second))
        with self.assertRaises(ValueError):
            subspace_algebra('union', first, second)

    def test_flag_counts(self):
        self.assertEqual(len(enumerate_flags(1, 2, 2)), 1)
        self.assertEqual(len(enumerate_flags(2, 2, 2)), 5)
        self.assertEqual(len(enumerate_flags(3, 3, 3)), 133)
        with self.assertRaises(ScaleExceeded):
            enumerate_flags(2, 2, 7)

    def test_classify(self):
        line = subspace_from_vectors([[1, 0]], 2, 2)
        flag = Flag((line, whole_space(2, 2)))
        space = vector_space(2, 2)
        identity = ((1, 0), (0, 1))
        self.assertEqual(classify_triple(flag, flag, space.encode([1, 0])), DecoratedMatrix(identity, ((1, 1),)))
        self.assertEqual(classify_triple(flag, flag, space.encode([0, 1])), DecoratedMatrix(identity, ((2, 2),)))
        self.assertEqual(classify_triple(flag, flag, 0), DecoratedMatrix(identity))

    def test_orbit_bijection(self):
        for n, m, d, q in ((2, 2, 2, 2), (1, 1, 3, 2), (2, 1, 2, 3), (2, 2, 0, 2)):
            table = build_orbit_table(n, m, d, q)
            self.assertEqual(len(table), dimension_count(n, m, d))
            self.assertEqual(table.total(), triple_count(n, m, d, q))
        self.assertTrue(verify_dimensions(2, 2, 2, [2]).passed)

    def test_budget(self):
        with self.assertRaises(ScaleExceeded):
            build_orbit_table(2, 2, 2, 2, budget=10)

    def test_g_invariance(self):
        rng = random.Random(7)
        space = vector_space(2, 2)
        flags = enumerate_flags(2, 2, 2)
        for _ in range(3):
            g = random_invertible(2, 2, rng)
            for first in flags:
                for second in flags:
                    for code in range(space.size):
                        moved = space.encode(g @ space.decode(code))
                        self.assertEqual(classify_fast(first.transform(g), second.transform(g), moved),
                                         classify_fast(first, second, code))

    def test_identity_convolution(self):
        table = build_orbit_table(2, 2, 1, 2)
        rng = random.Random(3)
        space = vector_space(1, 2)
        for z in table.keys():
            unit = diagonal(marginals(z)[0])
            self.assertEqual(oracle_convolution_constant(unit, z, z, 2), 1)
            first, second, code = table.representative(z)
            g = random_invertible(1, 2, rng)
            moved = (first.transform(g), second.transform(g), space.encode(g @ space.decode(code)))
            self.assertEqual(oracle_convolution_constant(unit, z, z, 2, representative=moved), 1)

    def test_lower_set_any_order(self):
        rng = random.Random(13)
        space = vector_space(3, 2)
        flags = enumerate_flags(2, 3, 2)
        for first in flags:
            for second in flags:
                lattice = pair_lattice(first, second)
                for code in range(space.size):
                    expected = minimal_lower_set(lattice, code)
                    self.assertEqual(minimal_lower_set(lattice, code, choose=lambda cells: cells[-1]), expected)
                    for _ in range(3):
                        self.assertEqual(minimal_lower_set(lattice, code, choose=rng.choice), expected)
                    self.assertEqual(maximal_cells(expected), classify_fast(first, second, code).delta)

    def test_constants_independent_of_representative(self):
        rng = random.Random(17)
        space = vector_space(2, 2)
        table = build_orbit_table(2, 2, 2, 2)
        keys = table.keys()
        nontrivial = 0
        for z in keys:
            first, second, code = table.representative(z)
            moves = []
            for _ in range(2):
                g = random_invertible(2, 2, rng)
                moves.append((first.transform(g), second.transform(g), space.encode(g @ space.decode(code))))
            rows, cols = marginals(z)
            for x in keys:
                if marginals(x)[0] != rows:
                    continue
                for y in keys:
                    if marginals(y)[1] != cols or marginals(y)[0] != marginals(x)[1]:
                        continue
                    constant = oracle_convolution_constant(x, y, z, 2)
                    for moved in moves:
                        self.assertEqual(oracle_convolution_constant(x, y, z, 2, representative=moved), constant)
                    if constant and x != diagonal(rows) and y != diagonal(cols):
                        nontrivial += 1
        self.assertGreater(nontrivial, 0)

    def test_oracle_agreement(self):
        for n, m, d in ((1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 2)):
            result = verify_oracle_agreement(n, m, d, 2)
            self.assertTrue(result.passed, msg=json.dumps(result.counterexample))
        self.assertTrue(verify_oracle_agreement(1, 1, 2, 3).passed)

    def test_zero_element(self):
        zero = ModuleElement.zero(Context(1, 1, 1))
        self.assertTrue(act_left(L, zero).is_zero())
        self.assertTrue(act_right(zero, L).is_zero())

    def test_calibration(self):
        calibration = calibrate_normalization(2, 1, 1, [2])
        self.assertEqual(calibration.chosen, Convention.BLM)
        self.assertNotIn(Convention.BLM_FLIPPED, calibration.matching)
        self.assertGreater(calibration.evidence['blm-flipped']['2'], 0)
        trivial = calibrate_normalization(1, 1, 1, [2, 3])
        self.assertIn(Convention.BLM, trivial.matching)

    def test_h_tokens_match_everywhere(self):
        z = DecoratedMatrix(((1,), (1,)), ((2, 1),))
        for convention in Convention:
            expansion = symbolic_e_expansion(HPLUS1, z, Side.LEFT, convention)
            self.assertEqual(expansion, {z: V_INV})


class TestCentralizer(unittest.TestCase):
    """Test for the centralizer and linalg scripts."""

    def test_echelon(self):
        self.assertEqual(rank([{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 1}]), 2)
        basis = EchelonBasis()
        self.assertTrue(basis.add({1: Fraction(1, 2)}))
        self.assertTrue(basis.contains({1: 3}))
        self.assertFalse(basis.contains({0: 1}))

    def test_small_contexts(self):
        for context in ((1, 1, 1), (2, 1, 1)):
            result = centralizer_report(*context, v_samples=(2, 3))
            self.assertTrue(result.passed, msg=result.details)
        result = centralizer_report(1, 1, 1)
        self.assertEqual(result.details['dimensions']['left_algebra'], 2)

    def test_identity_in_commutant(self):
        basis = enumerate_decorated(2, 1, 1)
        generators = specialized_generators(Context(2, 1, 1), Side.RIGHT, Fraction(2), basis)
        self.assertTrue(identity_commutes([columns for _, columns in generators], len(basis)))

    def test_preconditions(self):
        with self.assertRaises(ValueError):
            centralizer_report(1, 2, 1)
        with self.assertRaises(ValueError):
            check_samples([1])
        result = centralizer_report(1, 2, 1, v_samples=(2,), outside_hypothesis=True)
        self.assertEqual(result.details['label'], 'outside theorem hypothesis')


class TestSerialize(unittest.TestCase):
    """Test for the serialize script."""

    def test_forms(self):
        context = Context(1, 1, 1)
        x = DecoratedMatrix(((1,),))
        self.assertEqual(serialize_element(ModuleElement.zero(context)), '0')
        self.assertEqual(serialize_element(ModuleElement.basis(x)), '[[1]]{}')
        self.assertEqual(serialize_element(act_left(L, ModuleElement.basis(x))),
                         '(v^-2)*[[1]]{} + (v^-1)*[[1]]{(1,1)}')

    def test_round_trip(self):
        rng = random.Random(11)
        context = Context(2, 2, 2)
        basis = enumerate_decorated(2, 2, 2)
        for _ in range(20):
            terms = {}
            for x in rng.sample(basis, rng.randint(0, 5)):
                terms[x] = lp({rng.randint(-3, 3): rng.choice([-2, -1, 1, 3]) for _ in range(rng.randint(1, 3))})
            value = element(context, terms)
            self.assertEqual(element_from_text(serialize_element(value), context), value)
            self.assertEqual(ModuleElement.from_json(json.loads(serialize_element(value, 'json'))), value)

    def test_json_exponents_ascending(self):
        x = DecoratedMatrix(((1,),))
        coefficient = lp({-2: 1, -1: 1, 2: 1, 10: 1})
        text = serialize_element(element(Context(1, 1, 1), {x: coefficient}), 'json')
        emitted = list(json.loads(text)['terms'][0]['coeff'])
        self.assertEqual(emitted, ['-2', '-1', '2', '10'])
        self.assertEqual(canonical_json({'b': 1, '10': 2, 'a': 3, '-3': 4}),
                         canonical_json({'-3': 4, 'a': 3, '10': 2, 'b': 1}))
        self.assertEqual(list(json.loads(canonical_json({'b': 1, '10': 2, '2': 0}))), ['2', '10', 'b'])


class TestCli(unittest.TestCase):
    """Test for the cli script."""

    def run_main(self, args):
        stream = io.StringIO()
        with contextlib.redirect_stdout(stream):
            status = main(args)
        return status, stream.getvalue()

    def test_basis(self):
        status, out = self.run_main(['basis', '--n', '1', '--m', '1', '--d', '1', '--output', 'json'])
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)['dimension'], 2)

    def test_act(self):
        status, out = self.run_main(['act', '--side', 'left', '--token', 'L', '--n', '1', '--m', '1', '--d', '1',
                                     '--basis-index', '0', '--output', 'text'])
        self.assertEqual(status, 0)
        self.assertEqual(out.strip(), '(v^-2)*[[1]]{} + (v^-1)*[[1]]{(1,1)}')

    def test_exit_codes(self):
        status, _ = self.run_main(['act', '--token', 'E1', '--n', '1', '--m', '1', '--d', '1', '--basis-index', '0'])
        self.assertEqual(status, 2)
        status, _ = self.run_main(['oracle-orbits', '--n', '2', '--m', '2', '--d', '2', '--q', '2',
                                   '--max-work', '5'])
        self.assertEqual(status, 3)
        status, out = self.run_main(['dims', '--n', '2', '--m', '2', '--d', '2', '--q', '2'])
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)['status'], 'passed')
        with self.assertRaises(SystemExit):
            self.run_main(['basis', '--n', '0', '--m', '1', '--d', '1'])

    def test_deterministic_output(self):
        args = ['oracle-check', '--n', '1', '--m', '1', '--d', '1', '--q', '2']
        first, second = self.run_main(args), self.run_main(args)
        self.assertEqual(first, second)
        self.assertNotIn('wall_time', first[1])

    def test_env_budget(self):
        with mock.patch.dict(os.environ, {MAX_WORK_ENV: '5'}):
            self.assertEqual(max_work(), 5)
            status, _ = self.run_main(['dims', '--n', '1', '--m', '1', '--d', '3', '--q', '2'])
        self.assertEqual(status, 3)
        self.assertEqual(max_work(7), 7)


class TestHelpers(unittest.TestCase):
    """Test for the helpers, config and multi process scripts."""

    def test_format_bytes(self):
        self.assertEqual(format_bytes(500), '500B')
        self.assertEqual(format_bytes(2500), '2.5kB')
        self.assertEqual(format_bytes(3e6), '3.0MB')

    def test_elapsed_since(self):
        self.assertTrue(elapsed_since(0).endswith('hrs'))

    def test_profiles(self):
        desk = get_profile('desk')
        self.assertIn((3, 3, 3), desk.presentation)
        self.assertIn((3, 3, 3), desk.duality)
        self.assertIn((2, 2, 2), desk.centralizer)
        with self.assertRaises(ValueError):
            get_profile('nightly')

    def test_parallel_map(self):
        self.assertEqual(ParallelMap(1)(abs, [-1, 2, -3]), [1, 2, 3])
        self.assertEqual(ParallelMap(2)(abs, [-1, 2, -3]), [1, 2, 3])
        with self.assertRaises(ValueError):
            ParallelMap(0)


class TestPerformance(unittest.TestCase):
    """Test for the performance script."""

    def test_profile_time(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'profile_time.log')
            result, text = profile_time(dimension_count, 2, 2, 2, log_path=path)
            self.assertEqual(result, 27)
            self.assertTrue(os.path.exists(path))
            self.assertIn('function calls', text)

    def test_start_monitoring(self):
        self.assertEqual(start_monitoring(None, dimension_count, 2, 2, 2), 27)
        self.assertEqual(start_monitoring('memory', dimension_count, 2, 2, 2), 27)
        with self.assertRaises(ValueError):
            start_monitoring('disk', dimension_count, 1, 1, 1)


class TestLogger(unittest.TestCase):
    """Test for the logger and report scripts."""

    def test_events(self):
        with tempfile.TemporaryDirectory() as folder:
            sink = Logger(folder)
            sink.scalar_summary('calibration/blm', 0, 2)
            report = VerificationReport([verify_dimensions(1, 1, 1)])
            sink.check_summary(report.results[0])
            with open(os.path.join(folder, 'events.jsonl')) as stream:
                events = [json.loads(line) for line in stream]
        self.assertEqual([event['kind'] for event in events], ['scalar', 'check'])
        self.assertEqual(json.loads(report.dumps())['status'], 'passed')


if __name__ == '__main__':
    unittest.main()
