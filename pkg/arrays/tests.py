import tempfile
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from unittest import mock

import numpy as np
from django.test import SimpleTestCase

from graphs.exceptions import InvalidGraph
from graphs.generators import cycle
from graphs.models import Graph
from graphs.services import is_primitive, verify_srg
from parameters.services import eigendata

from .exceptions import (
    ArrayFormatError,
    CountTooLarge,
    DimensionMismatch,
    NotGeometric,
    NotLatin,
    NotOrthogonal,
    NotPrime,
    ParallelismNotTransitive,
    RepeatedPair,
    ResultNotOA,
    SymbolOutOfRange,
)
from .io import format_oa, parse_latin_square, parse_oa, read_latin_square, read_oa, write_latin_square, write_oa
from .models import ParallelClassSet
from .serializers import CompletionReportSerializer
from .services import (
    complement,
    complete,
    completion_bound,
    gen_mols_prime,
    latin_square_graph,
    latin_square_parameters,
    mols_to_oa,
    oa_to_mols,
    parallel_classes,
    validate_oa,
)


def linear_rows(n, coefficients):
    """Row (a, b) holds a*i + b*j mod n at column i*n + j."""
    i, j = np.divmod(np.arange(n * n), n)
    return np.array([(a * i + b * j) % n for a, b in coefficients])


def cyclic_oa(p, m):
    return mols_to_oa(gen_mols_prime(p, m - 2) if m > 2 else [], n=p)


def equal_up_to_relabelling(row, target, n):
    return any(np.array_equal(np.array(bijection)[row], target) for bijection in permutations(range(n)))


OA45_ROWS = linear_rows(5, [(1, 0), (0, 1), (1, 1), (1, 2)])


class ValidateTestCase(SimpleTestCase):
    def test_cyclic_oa(self):
        oa = validate_oa(OA45_ROWS)
        self.assertEqual((oa.m, oa.n, oa.deficiency), (4, 5, 2))
        self.assertFalse(oa.full)

    def test_two_coordinate_rows(self):
        oa = validate_oa(linear_rows(3, [(1, 0), (0, 1)]))
        self.assertEqual((oa.m, oa.n), (2, 3))

    def test_repeated_pair_modulo_four(self):
        with self.assertRaises(RepeatedPair) as caught:
            validate_oa(linear_rows(4, [(1, 0), (0, 1), (1, 1), (1, 2)]))
        self.assertEqual(caught.exception.witness['rows'], (0, 3))
        self.assertEqual(caught.exception.witness['columns'], (0, 2))

    def test_shape_errors(self):
        with self.assertRaises(DimensionMismatch):
            validate_oa([[0] * 7, [0] * 7])
        with self.assertRaises(DimensionMismatch):
            validate_oa([[0, 1, 0, 1], [0, 1]])
        with self.assertRaises(DimensionMismatch):
            validate_oa([[0, 0, 1, 1]])
        with self.assertRaises(DimensionMismatch):
            validate_oa(np.zeros((5, 4), dtype=int))

    def test_symbol_out_of_range(self):
        rows = linear_rows(3, [(1, 0), (0, 1)])
        rows[1, 4] = 3
        with self.assertRaises(SymbolOutOfRange) as caught:
            validate_oa(rows)
        self.assertEqual(caught.exception.witness, {'row': 1, 'column': 4, 'symbol': 3, 'top': 2})

    def test_cells_are_read_only(self):
        oa = validate_oa(OA45_ROWS)
        with self.assertRaises(ValueError):
            oa.cells[0, 0] = 1


class MolsTestCase(SimpleTestCase):
    def test_two_cyclic_squares_give_oa45(self):
        oa = mols_to_oa(gen_mols_prime(5, 2))
        self.assertEqual((oa.m, oa.n), (4, 5))
        self.assertTrue(np.array_equal(oa.cells[2], linear_rows(5, [(1, 1)])[0]))
        self.assertTrue(np.array_equal(oa.cells[3], linear_rows(5, [(2, 1)])[0]))

    def test_no_squares(self):
        oa = mols_to_oa([], n=3)
        self.assertEqual((oa.m, oa.n), (2, 3))
        with self.assertRaises(DimensionMismatch):
            mols_to_oa([])

    def test_order_two_has_no_orthogonal_pair(self):
        with self.assertRaises(NotOrthogonal) as caught:
            mols_to_oa([[[0, 1], [1, 0]], [[1, 0], [0, 1]]])
        self.assertEqual(caught.exception.witness['squares'], (0, 1))

    def test_not_latin(self):
        with self.assertRaises(NotLatin):
            mols_to_oa([[[0, 0], [1, 1]]])

    def test_round_trip(self):
        oa = cyclic_oa(7, 5)
        squares = oa_to_mols(oa)
        self.assertEqual(len(squares), 3)
        self.assertEqual(mols_to_oa(squares), oa)

    def test_generator(self):
        (square,) = gen_mols_prime(7, 1)
        self.assertTrue(np.array_equal(square, np.add.outer(np.arange(7), np.arange(7)) % 7))
        self.assertTrue(mols_to_oa(gen_mols_prime(3, 2)).full)

    def test_generator_errors(self):
        with self.assertRaises(NotPrime):
            gen_mols_prime(4, 1)
        with self.assertRaises(CountTooLarge):
            gen_mols_prime(5, 5)
        with self.assertRaises(CountTooLarge):
            gen_mols_prime(5, 0)


class LatinSquareGraphTestCase(SimpleTestCase):
    def test_rook_graph(self):
        self.assertEqual(verify_srg(latin_square_graph(cyclic_oa(5, 2))).as_tuple(), (25, 8, 3, 2))

    def test_oa45(self):
        self.assertEqual(verify_srg(latin_square_graph(validate_oa(OA45_ROWS))).as_tuple(), (25, 16, 9, 12))

    def test_oa22_is_the_four_cycle(self):
        g = latin_square_graph(cyclic_oa(2, 2))
        self.assertEqual(verify_srg(g).as_tuple(), (4, 2, 0, 2))
        self.assertFalse(is_primitive(g))

    def test_parameters_and_eigenvalues(self):
        for p in (3, 5, 7):
            for m in range(2, p):
                oa = cyclic_oa(p, m)
                sp = verify_srg(latin_square_graph(oa))
                with self.subTest(p=p, m=m):
                    self.assertEqual(sp.as_tuple(), latin_square_parameters(m, p))
                    data = eigendata(sp)
                    self.assertEqual((data.theta1, data.theta2), (p - m, -m))

    def test_complement(self):
        self.assertEqual(verify_srg(complement(cycle(5))).as_tuple(), (5, 2, 0, 1))
        full_minus = complement(latin_square_graph(validate_oa(OA45_ROWS)))
        self.assertEqual(verify_srg(full_minus).as_tuple(), (25, 8, 3, 2))
        k4_minus_edge = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual(complement(k4_minus_edge).edges(), [(2, 3)])

    def test_complement_that_is_not_an_involution(self):
        with mock.patch.object(Graph, 'complement', return_value=Graph.from_edges(3, [(0, 1)])):
            with self.assertRaises(InvalidGraph) as caught:
                complement(cycle(5))
        self.assertEqual(caught.exception.witness['problem'], 'complement is not an involution')


class CompletionTestCase(SimpleTestCase):
    def test_bound(self):
        self.assertEqual(completion_bound(0), Fraction(2, 3))
        self.assertEqual(completion_bound(1), 0)
        self.assertEqual(completion_bound(2), Fraction(14, 3))
        self.assertEqual(completion_bound(3), Fraction(92, 3))

    def test_oa45(self):
        oa = validate_oa(OA45_ROWS)
        full, report = complete(oa)
        self.assertEqual((full.m, full.n), (6, 5))
        self.assertTrue(full.full)
        self.assertTrue(np.array_equal(full.cells[:4], oa.cells))
        self.assertEqual((report.delta, report.bound, report.bound_met), (2, Fraction(14, 3), True))
        self.assertEqual((report.method, report.line_count, report.class_count), ('delsarte_cliques', 10, 2))
        self.assertIsNone(report.warning)

        targets = linear_rows(5, [(1, 3), (1, 4)])
        new_rows = full.cells[4:]
        matched = (
            (equal_up_to_relabelling(new_rows[0], targets[0], 5) and equal_up_to_relabelling(new_rows[1], targets[1], 5))
            or (equal_up_to_relabelling(new_rows[0], targets[1], 5) and equal_up_to_relabelling(new_rows[1], targets[0], 5))
        )
        self.assertTrue(matched)
        # lines are labelled in order of their smallest column
        self.assertTrue(np.array_equal(new_rows[0], linear_rows(5, [(4, 1)])[0]))

    def test_oa45_from_cyclic_mols(self):
        full, report = complete(cyclic_oa(5, 4))
        self.assertTrue(full.full)
        targets = linear_rows(5, [(3, 1), (4, 1)])
        for row in full.cells[4:]:
            self.assertTrue(any(equal_up_to_relabelling(row, target, 5) for target in targets))

    def test_deficiency_one_family(self):
        for p in (3, 5, 7, 11):
            with self.subTest(p=p):
                full, report = complete(cyclic_oa(p, p))
                self.assertEqual((full.m, full.n), (p + 1, p))
                self.assertEqual(report.method, 'clique_components')
                self.assertEqual(validate_oa(full.cells), full)

    def test_full_array_is_returned_unchanged(self):
        oa = cyclic_oa(5, 6)
        full, report = complete(oa)
        self.assertEqual(full, oa)
        self.assertTrue(report.already_full)
        self.assertEqual(report.method, 'already_full')

    def test_completes_small_deficiencies(self):
        cases = [(3, 2), (3, 3), (5, 3), (5, 4), (5, 5), (7, 6), (7, 7), (11, 10)]
        for p, m in cases:
            with self.subTest(p=p, m=m):
                oa = cyclic_oa(p, m)
                full, report = complete(oa)
                self.assertEqual(full.deficiency, 0)
                self.assertTrue(np.array_equal(full.cells[:m], oa.cells))
                self.assertEqual(complete(full)[0], full)

    def test_warning_below_the_bound(self):
        _, report = complete(cyclic_oa(3, 2))
        self.assertFalse(report.bound_met)
        self.assertIn('not guaranteed', report.warning)

    def test_too_many_cliques_is_not_geometric(self):
        with self.assertRaises(NotGeometric):
            complete(cyclic_oa(5, 2))

    def test_failure_below_the_bound_carries_the_warning(self):
        with self.assertRaises(NotGeometric) as caught:
            complete(cyclic_oa(5, 2))
        self.assertIn('not guaranteed', caught.exception.witness['bound_warning'])

    def test_failure_above_the_bound_has_no_warning(self):
        with mock.patch('arrays.services.parallel_classes', side_effect=ParallelismNotTransitive(
                line=[0, 1, 2, 3, 4], found=1, covered=5)):
            with self.assertRaises(ParallelismNotTransitive) as caught:
                complete(validate_oa(OA45_ROWS))
        self.assertNotIn('bound_warning', caught.exception.witness)

    def test_lines_without_a_parallelism(self):
        with self.assertRaises(ParallelismNotTransitive) as caught:
            parallel_classes([(0, 1), (0, 2), (1, 3)], 2)
        self.assertEqual(caught.exception.witness['line'], [0, 1])
        self.assertEqual(caught.exception.witness['found'], 1)

    def test_parallel_classes_partition_the_columns(self):
        lines = [(0, 1), (2, 3), (0, 2), (1, 3)]
        self.assertEqual(parallel_classes(lines, 2).classes, (((0, 1), (2, 3)), ((0, 2), (1, 3))))

    def test_extension_that_is_not_an_orthogonal_array(self):
        # a class labelling columns by i repeats the first row
        repeat = ParallelClassSet((((0, 1, 2), (3, 4, 5), (6, 7, 8)),))
        with mock.patch('arrays.services.parallel_classes', return_value=repeat):
            with self.assertRaises(ResultNotOA) as caught:
                complete(cyclic_oa(3, 3))
        self.assertIn('problem', caught.exception.witness)

    def test_report_serializer(self):
        _, report = complete(validate_oa(OA45_ROWS))
        data = CompletionReportSerializer(report).data
        self.assertEqual(data['bound'], '14/3')
        self.assertFalse(data['already_full'])


class ArrayFileTestCase(SimpleTestCase):
    def test_oa_round_trip(self):
        oa = validate_oa(OA45_ROWS)
        text = format_oa(oa)
        self.assertTrue(text.startswith('4 5\n'))
        n, cells = parse_oa(text)
        self.assertEqual(validate_oa(cells, n), oa)
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'oa45.oa'
            write_oa(oa, path)
            self.assertEqual(read_oa(path), oa)

    def test_latin_square_round_trip(self):
        (square,) = gen_mols_prime(5, 1)
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'l1.latin'
            write_latin_square(square, path)
            self.assertTrue(np.array_equal(read_latin_square(path), square))

    def test_format_errors(self):
        bad_files = ['', '2\n0 1 2 3\n', '2 2\n0 1 0 1\n', '2 2\n0 1 0\n0 0 1 1\n', '2 2\n0 1 0 x\n0 0 1 1\n']
        for text in bad_files:
            with self.subTest(text=text), self.assertRaises(ArrayFormatError):
                parse_oa(text)
        with self.assertRaises(ArrayFormatError):
            parse_latin_square('3\n0 1 2\n')
