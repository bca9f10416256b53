import json
import tempfile
from io import StringIO
from pathlib import Path

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from arrays.io import read_latin_square, read_oa
from graphs.generators import cycle, petersen, rook, triangular
from graphs.io import write_graph
from parameters.models import VerdictKind
from parameters.services import improved_bound

from .models import CensusRecord
from .services import census_row, census_table, sweep, sweep_quadruples


class CommandTestMixin:
    def setUp(self):
        super().setUp()
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()
        super().tearDown()

    def call(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return out.getvalue()

    def run_json(self, *args):
        return json.loads(self.call(*args))

    def run_failing(self, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command(*args, stdout=out)
        return caught.exception.returncode, json.loads(out.getvalue())

    def graph_file(self, name, g):
        path = self.dir / name
        write_graph(g, path)
        return str(path)


class CensusServiceTestCase(SimpleTestCase):
    def test_census_row_carries_classical_parameters(self):
        row = census_row(16, 5, 0, 2)
        self.assertEqual(str(row.classical), '(2, -1/3, 5/3)')
        self.assertEqual(row.verdict.kind, VerdictKind.WITHIN_BOUND)

    def test_census_row_for_inadmissible_quadruple(self):
        row = census_row(1849, 126, 43, 7)
        self.assertIsNone(row.params)
        self.assertEqual(row.verdict.kind, VerdictKind.INFEASIBLE)

    def test_conference_row_has_no_classical_parameters(self):
        row = census_row(13, 6, 2, 3)
        self.assertEqual(row.verdict.kind, VerdictKind.CONFERENCE)
        self.assertIsNone(row.classical)

    def test_improved_bound_is_smaller_from_m_six(self):
        for m in (6, 7, 10):
            self.assertTrue(all(row.smaller == 'improved' for row in census_table(m)))

    def test_forced_rows_are_flagged(self):
        rows = {row.mu: row for row in census_table(4)}
        self.assertEqual(rows[12].forced, 'latin_square')
        self.assertEqual(rows[16].forced, 'steiner')
        self.assertEqual(rows[13].forced, '')

    def test_census_rejects_small_m(self):
        with self.assertRaises(ValueError):
            census_table(2)

    def test_sweep_quadruples_satisfy_the_counting_identity(self):
        quadruples = list(sweep_quadruples(30))
        self.assertIn((10, 3, 0, 1), quadruples)
        self.assertIn((25, 8, 3, 2), quadruples)
        for v, k, lam, mu in quadruples:
            self.assertEqual((v - k - 1) * mu, k * (k - lam - 1))

    def test_sweep_keeps_integral_rows_by_default(self):
        rows = sweep(20)
        self.assertTrue(all(row.eigendata is not None for row in rows))
        self.assertIn((10, 3, 0, 1), [row.quadruple for row in rows])
        self.assertGreaterEqual(len(sweep(20, include_all=True)), len(rows))


class ClassifyCommandTestCase(CommandTestMixin, TestCase):
    def test_clebsch(self):
        data = self.run_json('classify', '16', '5', '0', '2')
        self.assertEqual(data['schema'], 1)
        result = data['result']
        self.assertEqual(result['classical']['triple'], '(2, -1/3, 5/3)')
        self.assertEqual(result['classical']['alpha'], '-1/3')
        self.assertEqual(result['eigendata']['theta2'], -3)
        self.assertEqual(result['eigendata']['m'], 3)
        self.assertEqual(result['verdict']['kind'], 'WithinBound')
        self.assertEqual(result['verdict']['bounds'], {'neumaier': '7', 'improved': '37/3'})

    def test_conference(self):
        result = self.run_json('classify', '13', '6', '2', '3')['result']
        self.assertEqual(result['verdict']['kind'], 'Conference')
        self.assertIsNone(result['classical'])

    def test_forced_latin_square(self):
        result = self.run_json('classify', '1849', '126', '43', '6')['result']
        self.assertEqual(result['verdict']['kind'], 'ForcedLatinSquareGeometric')
        self.assertEqual(result['verdict']['forced_structure']['latin_square_order'], 43)

    def test_infeasible_is_a_verdict(self):
        result = self.run_json('classify', '1849', '126', '43', '7')['result']
        self.assertEqual(result['verdict']['kind'], 'Infeasible')
        self.assertFalse(result['admissible'])

    def test_output_is_byte_identical(self):
        self.assertEqual(self.call('classify', '16', '5', '0', '2'), self.call('classify', '16', '5', '0', '2'))

    def test_no_floats(self):
        text = self.call('classify', '16', '5', '0', '2')
        self.assertNotIn('0.3333', text)
        self.assertNotIn('1.6666', text)

    def test_malformed_input(self):
        code, data = self.run_failing('classify', '16', 'five', '0', '2')
        self.assertEqual(code, 2)
        self.assertEqual(data['error']['code'], 'usage')
        self.assertIn('k', data['error']['detail'])

    def test_negative_input(self):
        code, _ = self.run_failing('classify', '16', '5', '-1', '2')
        self.assertEqual(code, 2)

    def test_save_archives_once(self):
        self.call('classify', '16', '5', '0', '2', '--save')
        self.call('classify', '16', '5', '0', '2', '--save')
        record = CensusRecord.objects.get(v=16, k=5, lam=0, mu=2)
        self.assertEqual(CensusRecord.objects.count(), 1)
        self.assertEqual(record.kind, 'WithinBound')
        self.assertEqual(record.classical, '(2, -1/3, 5/3)')
        self.assertEqual(record.improved_bound, '37/3')
        self.assertEqual(record.report['verdict']['kind'], 'WithinBound')


class DispatchCommandTestCase(CommandTestMixin, SimpleTestCase):
    def test_perturbations(self):
        self.assertEqual(self.run_json('dispatch', '3', '43', '6')['result']['kind'], 'ForcedLatinSquareGeometric')
        self.assertEqual(self.run_json('dispatch', '3', '50', '7')['result']['kind'], 'Infeasible')
        self.assertEqual(self.run_json('dispatch', '3', '41', '6')['result']['kind'], 'WithinBound')

    def test_small_m(self):
        self.assertEqual(self.run_json('dispatch', '2', '10', '2')['result']['kind'], 'SmallM')

    def test_zero_mu_is_rejected(self):
        code, _ = self.run_failing('dispatch', '3', '4', '0')
        self.assertEqual(code, 2)


class CensusCommandTestCase(CommandTestMixin, SimpleTestCase):
    def test_m_six_row(self):
        data = self.run_json('census', '--m', '6', '--mu-max', '30')
        self.assertEqual(data['result']['mu_upper_bound'], 9 * 6 ** 3)
        row = data['result']['rows'][-1]
        self.assertEqual(row['mu'], 30)
        self.assertEqual((row['neumaier'], row['improved']), ('488', '1376/3'))
        self.assertEqual(row['smaller'], 'improved')
        self.assertEqual(row['forced'], 'latin_square')

    def test_m_three_row(self):
        row = self.run_json('census', '--m', '3', '--mu-max', '6')['result']['rows'][5]
        self.assertEqual(row['mu'], 6)
        self.assertEqual((row['neumaier'], row['improved']), ('23', '125/3'))
        self.assertEqual(row['smaller'], 'neumaier')
        self.assertEqual(row['forced'], 'latin_square')

    def test_single_row(self):
        rows = self.run_json('census', '--m', '3', '--mu-max', '1')['result']['rows']
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['mu'], 1)

    def test_large_m_stays_exact(self):
        rows = self.run_json('census', '--m', str(10 ** 9), '--mu-max', '3')['result']['rows']
        self.assertEqual(rows[2]['neumaier'], '1999999997000000002')
        self.assertEqual(rows[2]['improved'], str(improved_bound(10 ** 9, 3)))
        self.assertTrue(all(row['smaller'] == 'improved' for row in rows))

    def test_lambda_mode(self):
        row = self.run_json('census', '--m', '6', '--mu-max', '30', '--lambda-mode')['result']['rows'][-1]
        self.assertEqual((row['neumaier_lambda'], row['improved_lambda']), (489, 459))

    def test_tsv(self):
        lines = self.call('census', '--m', '6', '--mu-max', '30', '--format', 'tsv').splitlines()
        self.assertEqual(lines[0], 'mu\tneumaier\timproved\tsmaller\tforced')
        self.assertEqual(len(lines), 31)
        self.assertEqual(lines[-1], '30\t488\t1376/3\timproved\tlatin_square')

    def test_small_m_is_rejected(self):
        code, data = self.run_failing('census', '--m', '2')
        self.assertEqual(code, 2)
        self.assertIn('m >= 3', data['error']['detail'])


class SweepCommandTestCase(CommandTestMixin, TestCase):
    def test_sweep(self):
        result = self.run_json('sweep', '--v-max', '10')['result']
        quadruples = [tuple(row['parameters'].values()) for row in result['rows']]
        self.assertEqual(result['count'], len(quadruples))
        self.assertIn((10, 3, 0, 1), quadruples)
        self.assertIn((10, 6, 3, 4), quadruples)
        self.assertEqual(quadruples, sorted(quadruples))

    def test_tsv(self):
        lines = self.call('sweep', '--v-max', '10', '--format', 'tsv').splitlines()
        self.assertEqual(lines[0].split('\t')[:4], ['v', 'k', 'lambda', 'mu'])
        self.assertIn('10\t3\t0\t1', '\n'.join(lines))

    def test_save(self):
        result = self.run_json('sweep', '--v-max', '10', '--save')['result']
        self.assertEqual(result['archived'], result['count'])
        self.assertEqual(CensusRecord.objects.count(), result['count'])
        self.assertTrue(CensusRecord.objects.filter(v=10, k=3, lam=0, mu=1).exists())


class GraphCommandTestCase(CommandTestMixin, SimpleTestCase):
    def test_verify_petersen(self):
        result = self.run_json('verify_srg', self.graph_file('petersen.graph', petersen()))['result']
        self.assertEqual(result['parameters'], {'v': 10, 'k': 3, 'lambda': 0, 'mu': 1})
        self.assertEqual(result['graph'], {'v': 10, 'e': 15})
        self.assertTrue(result['primitive'])

    def test_verify_fails_with_witness(self):
        code, data = self.run_failing('verify_srg', self.graph_file('c6.graph', cycle(6)))
        self.assertEqual(code, 1)
        self.assertEqual(data['error']['code'], 'diameter_exceeded')
        self.assertIn('pair', data['error']['witness'])

    def test_missing_file(self):
        code, _ = self.run_failing('verify_srg', str(self.dir / 'absent.graph'))
        self.assertEqual(code, 2)

    def test_malformed_file(self):
        path = self.dir / 'bad.graph'
        path.write_text('3 1\n0 x\n', encoding='ascii')
        code, data = self.run_failing('verify_srg', str(path))
        self.assertEqual(code, 2)
        self.assertEqual(data['error']['code'], 'graph_format')

    def test_lines_on_rook_graph(self):
        result = self.run_json('lines', self.graph_file('ls25.graph', rook(5)), '--sigma', '2')['result']
        self.assertEqual(result['lines']['line_count'], 10)
        self.assertTrue(result['audit']['all_delsarte'])
        self.assertEqual(result['audit']['line_count_margin'], 1)
        self.assertTrue(result['audit']['passed'])

    def test_lines_default_to_delsarte_cliques(self):
        result = self.run_json('lines', self.graph_file('t5.graph', triangular(5)))['result']
        self.assertEqual(result['lines']['origin'], 'delsarte')
        self.assertEqual(result['lines']['line_orders'], [4])
        self.assertEqual(result['audit']['line_count_margin'], 0)

    def test_lines_refuse_failed_metsch_conditions(self):
        code, data = self.run_failing('lines', self.graph_file('t5.graph', triangular(5)), '--sigma', '2')
        self.assertEqual(code, 1)
        self.assertEqual(data['error']['code'], 'metsch_conditions_not_met')

    def test_pg_check_triangular_graph(self):
        result = self.run_json('pg_check', self.graph_file('t5.graph', triangular(5)))['result']
        self.assertEqual(result['partial_geometry']['pg'], {'K': 4, 'R': 2, 'T': 2})
        self.assertTrue(result['point_graph_matches'])

    def test_pg_check_without_delsarte_cliques(self):
        code, data = self.run_failing('pg_check', self.graph_file('petersen.graph', petersen()))
        self.assertEqual(code, 1)
        self.assertEqual(data['error']['code'], 'not_delsarte_geometric')

    def test_pg_check_edge_lines(self):
        code, data = self.run_failing('pg_check', self.graph_file('petersen.graph', petersen()), '--sigma', '3')
        self.assertEqual(code, 1)
        self.assertIsNone(data['result']['partial_geometry']['pg'])
        self.assertEqual(data['result']['partial_geometry']['witness']['axiom'], 'T')

    def test_make_graph(self):
        text = self.call('make_graph', 'petersen')
        self.assertTrue(text.startswith('10 15\n'))

    def test_make_graph_to_file(self):
        path = self.dir / 'rook4.graph'
        result = self.run_json('make_graph', 'rook', '--n', '4', '--out', str(path))['result']
        self.assertEqual(result['graph'], {'v': 16, 'e': 48})
        verified = self.run_json('verify_srg', str(path))['result']
        self.assertEqual(verified['parameters'], {'v': 16, 'k': 6, 'lambda': 2, 'mu': 2})

    def test_make_graph_rejects_order_for_fixed_graphs(self):
        code, _ = self.run_failing('make_graph', 'clebsch', '--n', '3')
        self.assertEqual(code, 2)


class OrthogonalArrayCommandTestCase(CommandTestMixin, SimpleTestCase):
    def build_oa45(self):
        squares = self.run_json('oa', 'gen-mols', '--order', '5', '--count', '2', '--out-dir', str(self.dir))
        path = self.dir / 'oa45.oa'
        self.call('oa', 'from-mols', *squares['result']['paths'], '--out', str(path))
        return path

    def test_gen_mols(self):
        result = self.run_json('oa', 'gen-mols', '--order', '5', '--count', '2', '--out-dir', str(self.dir))['result']
        self.assertEqual(len(result['paths']), 2)
        square = read_latin_square(result['paths'][1])
        expected = [[(2 * i + j) % 5 for j in range(5)] for i in range(5)]
        self.assertEqual(square.tolist(), expected)

    def test_gen_mols_errors(self):
        code, data = self.run_failing('oa', 'gen-mols', '--order', '4', '--count', '2', '--out-dir', str(self.dir))
        self.assertEqual((code, data['error']['code']), (1, 'not_prime'))
        code, data = self.run_failing('oa', 'gen-mols', '--order', '5', '--count', '5', '--out-dir', str(self.dir))
        self.assertEqual((code, data['error']['code']), (1, 'count_too_large'))

    def test_complete_flagship(self):
        path = self.build_oa45()
        data = self.run_json('oa', 'complete', str(path))['result']
        self.assertEqual(data['report']['delta'], 2)
        self.assertEqual(data['report']['bound'], '14/3')
        self.assertTrue(data['report']['bound_met'])
        self.assertEqual(data['report']['method'], 'delsarte_cliques')
        self.assertTrue(data['path'].endswith('oa45.full.oa'))

        original, full = read_oa(path), read_oa(data['path'])
        self.assertEqual((full.m, full.n), (6, 5))
        self.assertTrue(np.array_equal(full.cells[:4], original.cells))

    def test_complete_full_array(self):
        path = self.build_oa45()
        first = self.run_json('oa', 'complete', str(path))['result']['path']
        report = self.run_json('oa', 'complete', first, '--out', str(self.dir / 'again.oa'))['result']['report']
        self.assertTrue(report['already_full'])
        self.assertEqual(report['method'], 'already_full')

    def test_verify(self):
        result = self.run_json('oa', 'verify', str(self.build_oa45()))['result']
        self.assertEqual(result['array'], {'m': 4, 'n': 5, 'deficiency': 2, 'full': False})
        self.assertEqual(result['graph_parameters'], {'v': 25, 'k': 16, 'lambda': 9, 'mu': 12})

    def test_verify_repeated_pair(self):
        path = self.dir / 'bad.oa'
        path.write_text('3 2\n0 0 1 1\n0 1 0 1\n0 0 1 1\n', encoding='ascii')
        code, data = self.run_failing('oa', 'verify', str(path))
        self.assertEqual(code, 1)
        self.assertEqual(data['error']['code'], 'repeated_pair')
        self.assertEqual(data['error']['witness']['rows'], [0, 2])

    def test_verify_missing_file(self):
        code, _ = self.run_failing('oa', 'verify', str(self.dir / 'absent.oa'))
        self.assertEqual(code, 2)

    def test_to_graph(self):
        target = self.dir / 'ls.graph'
        self.call('oa', 'to-graph', str(self.build_oa45()), '--out', str(target))
        result = self.run_json('verify_srg', str(target))['result']
        self.assertEqual(result['parameters'], {'v': 25, 'k': 16, 'lambda': 9, 'mu': 12})

    def test_to_mols(self):
        path = self.build_oa45()
        result = self.run_json('oa', 'to-mols', str(path), '--out-dir', str(self.dir / 'split'))['result']
        self.assertEqual(len(result['paths']), 2)
        for a, square_path in enumerate(result['paths'], start=1):
            expected = [[(a * i + j) % 5 for j in range(5)] for i in range(5)]
            self.assertEqual(read_latin_square(square_path).tolist(), expected)
