from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from .exceptions import (
    ConferenceGraph,
    InvalidClassicalParameters,
    InvalidParameters,
    NonIntegralMultiplicity,
    NonIntegralNonConference,
    NonIntegralParameters,
)
from .models import ClassicalParams, PgParams, StandardParams, VerdictKind
from .serializers import ClassicalParamsSerializer, VerdictSerializer
from .services import (
    bound_table,
    classify,
    classify_quadruple,
    dispatch,
    eigendata,
    eigenvalues_from_classical,
    from_classical,
    geometric_from_classical,
    geometric_threshold_ok,
    has_geometric_parameters,
    improved_bound,
    lambda_threshold,
    metsch_conditions,
    mu_one_obstructed,
    mu_upper_bound,
    neumaier_bound,
    pg_feasible,
    pg_point_graph,
    spls_sigma,
    spls_threshold_ok,
    to_classical,
)

CLEBSCH = StandardParams(16, 5, 0, 2)
PETERSEN = StandardParams(10, 3, 0, 1)
TRIANGULAR5 = StandardParams(10, 6, 3, 4)
ROOK5 = StandardParams(25, 8, 3, 2)
PALEY13 = StandardParams(13, 6, 2, 3)
LS3_43 = StandardParams(1849, 126, 43, 6)


def feasible_quadruples(v_max):
    """Every admissible quadruple with v <= v_max whose eigendata is integral."""
    for v in range(5, v_max + 1):
        for k in range(1, v - 1):
            for lam in range(k):
                numerator = k * (k - lam - 1)
                if numerator % (v - k - 1):
                    continue
                mu = numerator // (v - k - 1)
                if not 1 <= mu <= k:
                    continue
                sp = StandardParams(v, k, lam, mu)
                try:
                    if eigendata(sp).m is not None:
                        yield sp
                except (NonIntegralMultiplicity, NonIntegralNonConference):
                    continue


class StandardParamsTestCase(SimpleTestCase):
    def test_counting_identity_is_enforced(self):
        with self.assertRaises(InvalidParameters) as caught:
            StandardParams(1849, 126, 43, 7)
        self.assertIn('fails', caught.exception.witness['rule'])

    def test_complete_graph_is_rejected(self):
        with self.assertRaises(InvalidParameters):
            StandardParams(5, 4, 3, 4)

    def test_primitivity(self):
        self.assertTrue(PETERSEN.is_primitive)
        self.assertFalse(StandardParams(4, 2, 0, 2).is_primitive)

    def test_conference_pattern(self):
        self.assertTrue(PALEY13.is_conference_pattern)
        self.assertTrue(StandardParams(5, 2, 0, 1).is_conference_pattern)
        self.assertFalse(PETERSEN.is_conference_pattern)


class EigendataTestCase(SimpleTestCase):
    def test_clebsch(self):
        data = eigendata(CLEBSCH)
        self.assertEqual((data.theta1, data.theta2, data.m), (1, -3, 3))
        self.assertEqual((data.f_mult, data.g_mult), (10, 5))
        self.assertFalse(data.conference)

    def test_petersen(self):
        data = eigendata(PETERSEN)
        self.assertEqual((data.theta1, data.theta2, data.m, data.f_mult, data.g_mult), (1, -2, 2, 5, 4))

    def test_conference_graph_has_surd_eigenvalues(self):
        data = eigendata(PALEY13)
        self.assertTrue(data.conference)
        self.assertIsNone(data.m)
        self.assertEqual(sympy.simplify(data.theta1 - (-1 + sympy.sqrt(13)) / 2), 0)
        self.assertEqual(sympy.simplify(data.theta2 - (-1 - sympy.sqrt(13)) / 2), 0)
        self.assertEqual((data.f_mult, data.g_mult), (6, 6))

    def test_conference_with_square_discriminant_is_integral(self):
        data = eigendata(StandardParams(9, 4, 1, 2))
        self.assertTrue(data.conference)
        self.assertEqual(data.m, 2)

    def test_irrational_off_pattern_is_rejected(self):
        with self.assertRaises(NonIntegralNonConference):
            eigendata(StandardParams(17, 4, 0, 1))

    def test_non_integral_multiplicity_is_rejected(self):
        # eigenvalues 1 and -3 but multiplicities 35/4, 21/4
        with self.assertRaises(NonIntegralMultiplicity):
            eigendata(StandardParams(15, 7, 2, 4))

    def test_trace_and_count_identities_on_every_feasible_set(self):
        for sp in feasible_quadruples(60):
            data = eigendata(sp)
            self.assertEqual(data.f_mult + data.g_mult, sp.v - 1)
            self.assertEqual(sp.k + data.f_mult * data.theta1 + data.g_mult * data.theta2, 0)
            self.assertGreater(data.theta1, data.theta2)


class ClassicalParamsTestCase(SimpleTestCase):
    def test_clebsch_classical_parameters(self):
        cp = to_classical(CLEBSCH)
        self.assertEqual(cp.as_tuple(), (2, Fraction(-1, 3), Fraction(5, 3)))
        self.assertEqual(str(cp), '(2, -1/3, 5/3)')

    def test_petersen_and_rook_graph(self):
        self.assertEqual(to_classical(PETERSEN).as_tuple(), (1, Fraction(-1, 2), Fraction(3, 2)))
        self.assertEqual(to_classical(ROOK5).as_tuple(), (1, 0, 4))

    def test_from_classical(self):
        self.assertEqual(from_classical(ClassicalParams(2, Fraction(-1, 3), Fraction(5, 3))), CLEBSCH)
        self.assertEqual(from_classical(ClassicalParams(1, 0, 4)), ROOK5)
        self.assertEqual(from_classical(ClassicalParams(2, 1, 4)), StandardParams(25, 12, 5, 6))

    def test_non_integral_triple_is_rejected(self):
        with self.assertRaises(NonIntegralParameters):
            from_classical(ClassicalParams(2, 2, Fraction(1, 2)))
        with self.assertRaises(InvalidClassicalParameters):
            from_classical(ClassicalParams(2, -1, 3))

    def test_conference_graph_has_no_classical_parameters(self):
        with self.assertRaises(ConferenceGraph):
            to_classical(PALEY13)

    def test_round_trip_on_every_feasible_set(self):
        for sp in feasible_quadruples(80):
            self.assertEqual(from_classical(to_classical(sp)), sp)

    def test_eigenvalues_from_classical(self):
        self.assertEqual(eigenvalues_from_classical(to_classical(CLEBSCH)), (1, -3))

    def test_classical_serializer_uses_fraction_strings(self):
        data = ClassicalParamsSerializer(to_classical(CLEBSCH)).data
        self.assertEqual((data['b'], data['alpha'], data['beta']), ('2', '-1/3', '5/3'))


class BoundsTestCase(SimpleTestCase):
    def test_neumaier_bound(self):
        self.assertEqual(neumaier_bound(3, 6), 23)
        self.assertEqual(neumaier_bound(6, 30), 488)
        self.assertEqual(neumaier_bound(1, 1), -1)

    def test_improved_bound(self):
        self.assertEqual(improved_bound(6, 30), Fraction(1376, 3))
        self.assertEqual(improved_bound(3, 6), Fraction(125, 3))
        for m in range(1, 12):
            self.assertEqual(improved_bound(m, 1), 3 * m - 4)

    def test_mu_upper_bound(self):
        self.assertEqual([mu_upper_bound(m) for m in (2, 3, 5)], [8, 81, 875])
        with self.assertRaises(ValueError):
            mu_upper_bound(1)

    def test_improved_bound_wins_from_m_six(self):
        for m in range(6, 21):
            table = bound_table(m)
            self.assertEqual(len(table.mu), mu_upper_bound(m))
            self.assertTrue(table.improved_smaller().all(), msg='m = %d' % m)

    def test_neumaier_bound_wins_at_m_three_mu_six(self):
        self.assertLess(neumaier_bound(3, 6), improved_bound(3, 6))

    def test_table_matches_scalar_bounds(self):
        for m in (3, 6, 11):
            table = bound_table(m, mu_max=200)
            for index in (0, 1, 57, len(table.mu) - 1):
                mu = int(table.mu[index])
                self.assertEqual(table.neumaier(index), neumaier_bound(m, mu))
                self.assertEqual(table.improved(index), improved_bound(m, mu))

    def test_table_is_exact_for_large_m(self):
        for m, mu_max in ((10 ** 9, 3), (4_000_000_000, 1)):
            table = bound_table(m, mu_max=mu_max)
            for index, mu in enumerate(table.mu.tolist()):
                self.assertEqual(table.neumaier(index), neumaier_bound(m, mu))
                self.assertEqual(table.improved(index), improved_bound(m, mu))
        self.assertEqual(bound_table(10 ** 9, 3).neumaier(2), 1999999997000000002)
        self.assertTrue(bound_table(10 ** 9, 3).improved_smaller().all())

    def test_lambda_threshold(self):
        self.assertEqual(lambda_threshold(Fraction(125, 3)), 42)
        self.assertEqual(lambda_threshold(Fraction(23)), 24)


class GeometricParametersTestCase(SimpleTestCase):
    def test_rook_graph(self):
        self.assertEqual(has_geometric_parameters(ROOK5), PgParams(5, 2, 1))

    def test_triangular_graph(self):
        self.assertEqual(has_geometric_parameters(TRIANGULAR5), PgParams(4, 2, 2))

    def test_petersen_is_not_geometric(self):
        self.assertIsNone(has_geometric_parameters(PETERSEN))

    def test_pg_grid_recovers_its_parameters(self):
        recovered = 0
        for K in range(2, 9):
            for R in range(2, 7):
                for T in range(1, min(K, R) + 1):
                    pg = PgParams(K, R, T)
                    try:
                        sp = pg_point_graph(pg)
                        eigendata(sp)
                    except (InvalidParameters, NonIntegralMultiplicity, NonIntegralNonConference):
                        continue
                    self.assertEqual(has_geometric_parameters(sp), pg)
                    recovered += 1
        self.assertGreater(recovered, 20)

    def test_geometric_from_classical(self):
        self.assertEqual(geometric_from_classical(ClassicalParams(1, 0, 4)), PgParams(5, 2, 1))
        self.assertIsNone(geometric_from_classical(to_classical(CLEBSCH)))
        self.assertIsNone(geometric_from_classical(ClassicalParams(1, 2, 4)))

    def test_pg_feasible(self):
        self.assertTrue(pg_feasible(PgParams(5, 2, 1)).feasible)
        self.assertTrue(pg_feasible(PgParams(4, 2, 2)).feasible)
        verdict = pg_feasible(PgParams(200, 5, 2))
        self.assertFalse(verdict.feasible)
        self.assertIn('199 exceeds 27', verdict.reason)

    def test_pg_feasible_equality_clause(self):
        # K - 1 = (R - T)^2 (2T - 1) = 27 with T = 2, R = 5 = 2T + 1: allowed
        self.assertTrue(pg_feasible(PgParams(28, 5, 2)).feasible)
        # same equality with R = 6, T = 3: (3)^2 * 5 = 45, R != 2T + 1
        self.assertFalse(pg_feasible(PgParams(46, 6, 3)).feasible)


class MetschConditionsTestCase(SimpleTestCase):
    def test_rook_graph_sigma_two(self):
        self.assertTrue(metsch_conditions(ROOK5, 2))

    def test_petersen_sigma_one(self):
        self.assertFalse(metsch_conditions(PETERSEN, 1))

    def test_mu_one_with_large_lambda(self):
        sp = StandardParams(209, 16, 3, 1)
        self.assertGreater((sp.lam + 1) * (sp.lam + 2), sp.k)
        self.assertTrue(metsch_conditions(sp, sp.lam + 1))

    def test_spls_threshold(self):
        self.assertTrue(spls_threshold_ok(ClassicalParams(2, 0, 17)))
        self.assertTrue(spls_threshold_ok(ClassicalParams(2, 0, 15)))
        self.assertFalse(spls_threshold_ok(ClassicalParams(2, 0, 14)))
        self.assertFalse(spls_threshold_ok(ClassicalParams(2, 0, 8)))
        self.assertTrue(spls_threshold_ok(ClassicalParams(1, 0, 100)))

    def test_spls_threshold_preconditions(self):
        with self.assertRaises(InvalidClassicalParameters):
            spls_threshold_ok(ClassicalParams(Fraction(3, 2), 0, 10))
        with self.assertRaises(InvalidClassicalParameters):
            spls_threshold_ok(ClassicalParams(1, Fraction(-1, 2), 10))

    def test_spls_sigma(self):
        self.assertEqual([spls_sigma(b) for b in (1, 2, 3, 5)], [2, 3, 5, 7])

    def test_geometric_threshold(self):
        self.assertTrue(geometric_threshold_ok(ClassicalParams(2, 0, 10)))
        self.assertFalse(geometric_threshold_ok(ClassicalParams(2, 0, 9)))
        self.assertTrue(geometric_threshold_ok(ClassicalParams(2, 1, 25)))
        with self.assertRaises(InvalidClassicalParameters):
            geometric_threshold_ok(ClassicalParams(1, 0, 10))


class ClassifyTestCase(SimpleTestCase):
    def test_latin_square_is_forced(self):
        verdict = classify(LS3_43)
        self.assertEqual(verdict.kind, VerdictKind.FORCED_LATIN_SQUARE)
        self.assertEqual(verdict.bounds.improved, Fraction(125, 3))
        self.assertTrue(verdict.exceeds_improved)
        self.assertEqual(verdict.forced_structure['latin_square_order'], 43)
        self.assertEqual(verdict.forced_structure['pg'], [43, 3, 2])

    def test_conference(self):
        self.assertEqual(classify(PALEY13).kind, VerdictKind.CONFERENCE)

    def test_small_m(self):
        verdict = classify(PETERSEN)
        self.assertEqual(verdict.kind, VerdictKind.SMALL_M)
        self.assertEqual(verdict.m, 2)

    def test_clebsch_is_within_bound(self):
        verdict = classify(CLEBSCH)
        self.assertEqual(verdict.kind, VerdictKind.WITHIN_BOUND)
        self.assertEqual(verdict.bounds.improved, Fraction(37, 3))
        self.assertEqual(verdict.bounds.neumaier, 7)

    def test_steiner_block_graph_is_forced(self):
        # block graph of a Steiner triple system on 127 points: pg(63, 3, 3)
        sp = pg_point_graph(PgParams(63, 3, 3))
        verdict = classify(sp)
        self.assertEqual(verdict.kind, VerdictKind.FORCED_STEINER)
        self.assertEqual(verdict.forced_structure['design'], [127, 3, 1])

    def test_perturbations_of_the_triple(self):
        self.assertEqual(dispatch(3, 43, 6).kind, VerdictKind.FORCED_LATIN_SQUARE)
        self.assertEqual(improved_bound(3, 7), 49)
        self.assertEqual(dispatch(3, 50, 7).kind, VerdictKind.INFEASIBLE)
        self.assertEqual(dispatch(3, 41, 6).kind, VerdictKind.WITHIN_BOUND)

    def test_perturbed_quadruples_are_infeasible(self):
        self.assertEqual(classify_quadruple(1849, 126, 43, 7).kind, VerdictKind.INFEASIBLE)
        verdict = classify_quadruple(1849, 126, 41, 6)
        self.assertEqual(verdict.kind, VerdictKind.INFEASIBLE)
        self.assertTrue(verdict.reason.startswith('invalid_parameters'))

    def test_mu_one_obstruction(self):
        sp = StandardParams(209, 16, 3, 1)
        self.assertTrue(mu_one_obstructed(sp))
        verdict = classify(sp)
        self.assertEqual(verdict.kind, VerdictKind.INFEASIBLE)
        self.assertEqual(verdict.reason, 'mu_one_obstruction')

    def test_petersen_and_moore_graphs_pass_the_mu_one_test(self):
        self.assertFalse(mu_one_obstructed(PETERSEN))
        self.assertNotEqual(classify(PETERSEN).reason, 'mu_one_obstruction')
        self.assertEqual(classify(StandardParams(50, 7, 0, 1)).kind, VerdictKind.WITHIN_BOUND)
        self.assertEqual(classify(StandardParams(400, 21, 2, 1)).kind, VerdictKind.WITHIN_BOUND)

    def test_imprimitive(self):
        verdict = classify(StandardParams(4, 2, 0, 2))
        self.assertEqual((verdict.kind, verdict.reason), (VerdictKind.INFEASIBLE, 'imprimitive'))
        self.assertEqual(verdict.m, 2)
        self.assertEqual((verdict.bounds.neumaier, verdict.bounds.improved), (2, Fraction(20, 3)))
        self.assertFalse(verdict.exceeds_neumaier or verdict.exceeds_improved)

    def test_forced_only_on_the_two_mu_values(self):
        for sp in feasible_quadruples(120):
            verdict = classify(sp)
            if verdict.kind.forced:
                self.assertIn(sp.mu, (verdict.m * (verdict.m - 1), verdict.m ** 2))
        for m in range(3, 7):
            for mu in range(1, 60):
                verdict = dispatch(m, 400, mu)
                if verdict.kind.forced:
                    self.assertIn(mu, (m * (m - 1), m * m))

    def test_verdict_serializer(self):
        data = VerdictSerializer(classify(LS3_43)).data
        self.assertEqual(data['kind'], 'ForcedLatinSquareGeometric')
        self.assertEqual(data['bounds'], {'neumaier': '23', 'improved': '125/3'})
        self.assertEqual(VerdictSerializer(classify(PALEY13)).data['bounds'], None)
