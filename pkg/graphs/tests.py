import tempfile
from itertools import combinations
from pathlib import Path

import networkx as nx
import numpy as np
import sympy
from django.test import SimpleTestCase, override_settings

from parameters.exceptions import ConferenceGraph
from parameters.models import PgParams, StandardParams
from parameters.services import eigendata, pg_point_graph
from utils.concurrency import worker_count

from .cliques import iter_maximal_cliques, maximal_cliques
from .exceptions import (
    DiameterExceeded,
    GraphFormatError,
    InvalidGraph,
    MetschConditionsNotMet,
    NotDelsarteGeometric,
    NotPartialLinearSpace,
    NotRegular,
    NotStronglyRegular,
    SigmaExceeded,
)
from .generators import clebsch, complete, cycle, paley, petersen, random_graph, rook, triangular
from .io import format_graph, parse_graph, read_graph, write_graph
from .linalg import bareiss_rank
from .models import Graph, LineSystem
from .serializers import LineAuditSerializer
from .services import (
    audit_lines,
    check_partial_geometry,
    delsarte_lines,
    extract_lines,
    gram_rank,
    incidence_rank,
    is_partial_geometry,
    is_primitive,
    verify_srg,
)

T5 = StandardParams(10, 6, 3, 4)
LS25 = StandardParams(25, 8, 3, 2)
PETERSEN = StandardParams(10, 3, 0, 1)


def brute_force_maximal_cliques(g):
    """Every maximal clique by walking all 2^v vertex subsets."""
    neighbours = [sum(1 << y for y in g.adjacency[x]) for x in range(g.v)]
    clique = [False] * (1 << g.v)
    clique[0] = True
    found = set()
    for mask in range(1, 1 << g.v):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        clique[mask] = clique[rest] and (neighbours[low] & rest) == rest
        if not clique[mask]:
            continue
        extendable = any(not mask >> x & 1 and neighbours[x] & mask == mask for x in range(g.v))
        if not extendable:
            found.add(tuple(x for x in range(g.v) if mask >> x & 1))
    return found


def corpus():
    return {
        'petersen': petersen(),
        'c5': cycle(5),
        't5': triangular(5),
        't6': triangular(6),
        'k7': complete(7),
        'rook4': rook(4),
        'rook5': rook(5),
        'clebsch': clebsch(),
        'paley13': paley(13),
    }


class GraphModelTestCase(SimpleTestCase):
    def test_from_edges_rejects_loops_and_duplicates(self):
        with self.assertRaises(InvalidGraph):
            Graph.from_edges(3, [(1, 1)])
        with self.assertRaises(InvalidGraph) as caught:
            Graph.from_edges(3, [(0, 1), (1, 0)])
        self.assertEqual(caught.exception.witness['edge'], (0, 1))
        with self.assertRaises(InvalidGraph):
            Graph.from_edges(3, [(0, 3)])

    def test_complement_is_an_involution(self):
        g = random_graph(12, 0.4, seed=7)
        self.assertEqual(g.complement().complement(), g)
        self.assertEqual(g.complement().complement().edges(), g.edges())

    def test_networkx_round_trip(self):
        g = petersen()
        self.assertEqual(Graph.from_networkx(g.to_networkx()), g)

    def test_triangular_labels(self):
        g = triangular(5)
        # vertex 0 is {0, 1}, vertex 9 is {3, 4}: disjoint pairs are not adjacent
        self.assertFalse(g.adjacent(0, 9))
        self.assertTrue(g.adjacent(0, 1))


class GraphFileTestCase(SimpleTestCase):
    def test_format_and_parse(self):
        g = cycle(5)
        text = format_graph(g)
        self.assertEqual(text.splitlines()[0], '5 5')
        self.assertEqual(parse_graph(text), g)

    def test_read_and_write(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'petersen.graph'
            write_graph(petersen(), path)
            self.assertEqual(read_graph(path), petersen())

    def test_format_errors(self):
        bad_files = {
            'empty': '',
            'header': '3\n',
            'count': '3 2\n0 1\n',
            'order': '3 1\n2 1\n',
            'range': '3 1\n0 3\n',
            'duplicate': '3 2\n0 1\n0 1\n',
            'characters': '3 1\n0 x\n',
        }
        for name, text in bad_files.items():
            with self.subTest(name), self.assertRaises(GraphFormatError):
                parse_graph(text)

    def test_error_names_the_line(self):
        with self.assertRaises(GraphFormatError) as caught:
            parse_graph('4 2\n0 1\n1 9\n')
        self.assertEqual(caught.exception.witness['line'], 3)


class VerifySrgTestCase(SimpleTestCase):
    def test_known_strongly_regular_graphs(self):
        expected = {
            'petersen': (10, 3, 0, 1),
            'c5': (5, 2, 0, 1),
            't5': (10, 6, 3, 4),
            't6': (15, 8, 4, 4),
            'rook4': (16, 6, 2, 2),
            'rook5': (25, 8, 3, 2),
            'clebsch': (16, 5, 0, 2),
            'paley13': (13, 6, 2, 3),
        }
        graphs = corpus()
        for name, quadruple in expected.items():
            with self.subTest(name):
                self.assertEqual(verify_srg(graphs[name]).as_tuple(), quadruple)

    def test_not_regular(self):
        with self.assertRaises(NotRegular) as caught:
            verify_srg(Graph.from_edges(3, [(0, 1), (1, 2)]))
        self.assertEqual(caught.exception.witness['vertex'], 1)

    def test_lambda_not_constant(self):
        prism = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])
        with self.assertRaises(NotStronglyRegular) as caught:
            verify_srg(prism)
        self.assertEqual(caught.exception.witness['pair'], (0, 3))
        self.assertEqual(caught.exception.witness['relation'], 'adjacent')

    def test_mu_not_constant(self):
        wagner = Graph.from_networkx(nx.circulant_graph(8, [1, 4]))
        with self.assertRaises(NotStronglyRegular) as caught:
            verify_srg(wagner)
        self.assertEqual(caught.exception.witness['pair'], (0, 3))
        self.assertEqual(caught.exception.witness['relation'], 'non-adjacent')

    def test_diameter_three(self):
        with self.assertRaises(DiameterExceeded) as caught:
            verify_srg(cycle(6))
        self.assertEqual(caught.exception.witness['pair'], (0, 3))

    def test_disconnected(self):
        two_triangles = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        with self.assertRaises(DiameterExceeded) as caught:
            verify_srg(two_triangles)
        self.assertEqual(caught.exception.witness['pair'], (0, 3))

    def test_complete_graph(self):
        with self.assertRaises(NotStronglyRegular):
            verify_srg(complete(4))

    def test_primitivity(self):
        self.assertTrue(is_primitive(petersen()))
        self.assertTrue(is_primitive(cycle(5)))
        self.assertFalse(is_primitive(cycle(4)))


class CliqueTestCase(SimpleTestCase):
    def test_complete_graph(self):
        self.assertEqual(maximal_cliques(complete(4), 2), [(0, 1, 2, 3)])

    def test_petersen_edges(self):
        cliques = maximal_cliques(petersen(), 2)
        self.assertEqual(cliques, petersen().edges())

    def test_triangular_stars(self):
        cliques = maximal_cliques(triangular(5), 4)
        self.assertEqual(len(cliques), 5)
        self.assertEqual(cliques[0], (0, 1, 2, 3))
        # below order 4 the ten triangles {ab, bc, ca} appear too
        self.assertEqual(len(maximal_cliques(triangular(5), 2)), 15)

    def test_agrees_with_brute_force_on_fixed_graphs(self):
        for name in ('petersen', 'c5', 't5', 'k7'):
            g = corpus()[name]
            with self.subTest(name):
                self.assertEqual(set(maximal_cliques(g)), brute_force_maximal_cliques(g))

    def test_agrees_with_brute_force_on_random_graphs(self):
        rng = np.random.default_rng(2024)
        for seed in range(50):
            n = int(rng.integers(4, 15))
            p = float(rng.choice([0.2, 0.4, 0.6, 0.8]))
            g = random_graph(n, p, seed=seed)
            with self.subTest(seed=seed, n=n, p=p):
                cliques = maximal_cliques(g)
                self.assertEqual(set(cliques), brute_force_maximal_cliques(g))
                self.assertEqual(len(cliques), len(set(cliques)))
                self.assertEqual(cliques, sorted(cliques))
                oracle = {tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx())}
                self.assertEqual(set(cliques), oracle)

    def test_min_size_filters_maximal_cliques(self):
        g = random_graph(14, 0.6, seed=3)
        everything = maximal_cliques(g)
        self.assertEqual(maximal_cliques(g, 4), [c for c in everything if len(c) >= 4])

    def test_lazy_enumeration_matches(self):
        g = rook(5)
        self.assertEqual(sorted(iter_maximal_cliques(g, 5)), maximal_cliques(g, 5))

    def test_output_does_not_depend_on_worker_count(self):
        g = random_graph(14, 0.5, seed=11)
        with override_settings(SRGFORGE={'THREADS': 1}):
            sequential = maximal_cliques(g)
        with override_settings(SRGFORGE={'THREADS': 4}):
            threaded = maximal_cliques(g)
        self.assertEqual(sequential, threaded)

    def test_malformed_thread_count_falls_back(self):
        with override_settings(SRGFORGE={'THREADS': 'many'}):
            with self.assertLogs('utils.concurrency', 'WARNING') as logs:
                workers = worker_count()
        self.assertGreaterEqual(workers, 1)
        self.assertIn('not an integer', logs.output[0])
        with override_settings(SRGFORGE={'THREADS': '3'}):
            self.assertEqual(worker_count(), 3)

    def test_delsarte_bound_on_the_corpus(self):
        for name, g in corpus().items():
            if name == 'k7':
                continue
            sp = verify_srg(g)
            m = eigendata(sp).m
            if m is None:
                continue
            with self.subTest(name):
                largest = max(len(clique) for clique in maximal_cliques(g))
                self.assertLessEqual(largest * m, m + sp.k)


class RankTestCase(SimpleTestCase):
    def test_agrees_with_sympy(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            rows, inner, cols = (int(x) for x in rng.integers(1, 8, size=3))
            matrix = rng.integers(-3, 4, size=(rows, inner)) @ rng.integers(-3, 4, size=(inner, cols))
            with self.subTest(matrix=matrix.tolist()):
                self.assertEqual(bareiss_rank(matrix.tolist()), sympy.Matrix(matrix.tolist()).rank())

    def test_skips_empty_columns(self):
        self.assertEqual(bareiss_rank([[0, 1, 2], [0, 2, 4], [0, 0, 1]]), 2)
        self.assertEqual(bareiss_rank([]), 0)
        self.assertEqual(bareiss_rank([[0, 0], [0, 0]]), 0)

    def test_single_line(self):
        self.assertEqual(incidence_rank(LineSystem(complete(3), ((0, 1, 2),))), 1)

    def test_incidence_and_gram_rank_agree(self):
        systems = [
            delsarte_lines(triangular(5), T5),
            extract_lines(rook(5), LS25, 2),
            extract_lines(petersen(), PETERSEN, 3, override=True),
        ]
        for ls in systems:
            self.assertEqual(incidence_rank(ls), gram_rank(ls))
            self.assertEqual(incidence_rank(ls), sympy.Matrix(ls.incidence_matrix().tolist()).rank())


class LineExtractionTestCase(SimpleTestCase):
    def test_rook_graph_rows_and_columns(self):
        ls = extract_lines(rook(5), LS25, 2)
        self.assertEqual(len(ls.lines), 10)
        self.assertEqual({len(line) for line in ls.lines}, {5})
        self.assertIn((0, 1, 2, 3, 4), ls.lines)
        self.assertIn((0, 5, 10, 15, 20), ls.lines)

    def test_metsch_conditions_gate_extraction(self):
        with self.assertRaises(MetschConditionsNotMet):
            extract_lines(triangular(5), T5, 2)

    def test_triangles_break_the_partial_linear_space(self):
        with self.assertRaises(NotPartialLinearSpace) as caught:
            extract_lines(triangular(5), T5, 2, override=True)
        self.assertEqual(caught.exception.witness['count'], 2)

    def test_petersen_sigma_exceeded(self):
        with self.assertRaises(SigmaExceeded) as caught:
            extract_lines(petersen(), PETERSEN, 2, override=True)
        self.assertEqual(caught.exception.witness, {'vertex': 0, 'count': 3, 'sigma': 2})

    def test_petersen_edge_lines(self):
        ls = extract_lines(petersen(), PETERSEN, 3)
        self.assertEqual(len(ls.lines), 15)

    def test_delsarte_lines_of_the_triangular_graph(self):
        ls = delsarte_lines(triangular(5), T5)
        self.assertEqual(len(ls.lines), 5)
        self.assertEqual(ls.lines[0], (0, 1, 2, 3))
        self.assertEqual(ls.origin, 'delsarte')

    def test_no_delsarte_cliques(self):
        with self.assertRaises(NotDelsarteGeometric):
            delsarte_lines(petersen(), PETERSEN)
        with self.assertRaises(NotDelsarteGeometric):
            delsarte_lines(clebsch(), StandardParams(16, 5, 0, 2))
        with self.assertRaises(ConferenceGraph):
            delsarte_lines(paley(13), StandardParams(13, 6, 2, 3))


class LineAuditTestCase(SimpleTestCase):
    def test_triangular_graph_is_tight(self):
        audit = audit_lines(delsarte_lines(triangular(5), T5), T5)
        self.assertEqual(audit.tau, (2,) * 10)
        self.assertEqual(len(audit.delsarte_vertices), 10)
        self.assertEqual((audit.line_count, audit.g, audit.incidence_rank), (5, 5, 5))
        self.assertEqual(10 - audit.line_count, 5)
        self.assertEqual(audit.line_count_margin, 0)
        self.assertTrue(audit.tau_ok and audit.line_count_ok and audit.rank_ok)
        self.assertIsNone(audit.delsarte_share_ok)
        self.assertTrue(audit.alpha_ok)
        self.assertTrue(audit.delsarte_intersections_ok)
        self.assertTrue(audit.passed)

    def test_rook_graph(self):
        audit = audit_lines(extract_lines(rook(5), LS25, 2), LS25)
        self.assertEqual((audit.line_count, audit.g, audit.incidence_rank), (10, 16, 9))
        self.assertEqual(len(audit.delsarte_vertices), 25)
        self.assertEqual(audit.line_count_margin, 1)
        self.assertEqual(min(audit.g, len(audit.delsarte_vertices)), 16)
        self.assertEqual(25 - audit.incidence_rank, audit.g)
        self.assertTrue(audit.delsarte_share_ok)
        self.assertTrue(audit.passed)

    def test_tau_bounds_on_certified_line_systems(self):
        systems = [
            (delsarte_lines(triangular(5), T5), T5),
            (delsarte_lines(triangular(6), StandardParams(15, 8, 4, 4)), StandardParams(15, 8, 4, 4)),
            (extract_lines(rook(5), LS25, 2), LS25),
            (extract_lines(rook(4), StandardParams(16, 6, 2, 2), 2, override=True), StandardParams(16, 6, 2, 2)),
        ]
        for ls, sp in systems:
            audit = audit_lines(ls, sp)
            self.assertTrue(all(t >= audit.m for t in audit.tau))
            self.assertTrue(all(d <= t for d, t in zip(audit.tau_D, audit.tau)))
            self.assertGreaterEqual(min(audit.g, len(audit.delsarte_vertices)), sp.v - audit.line_count)

    def test_serializer(self):
        data = LineAuditSerializer(audit_lines(extract_lines(rook(5), LS25, 2), LS25)).data
        self.assertTrue(data['all_delsarte'])
        self.assertEqual(data['line_count_margin'], 1)
        self.assertEqual(data['witnesses'], {})


class PartialGeometryTestCase(SimpleTestCase):
    def test_triangular_graph(self):
        ls = delsarte_lines(triangular(5), T5)
        pg = is_partial_geometry(ls)
        self.assertEqual(pg, PgParams(4, 2, 2))
        self.assertEqual(pg_point_graph(pg), verify_srg(triangular(5)))

    def test_rook_graph(self):
        ls = extract_lines(rook(5), LS25, 2)
        pg = is_partial_geometry(ls)
        self.assertEqual(pg, PgParams(5, 2, 1))
        self.assertEqual(pg_point_graph(pg), verify_srg(rook(5)))

    def test_petersen_edge_lines_are_not_a_partial_geometry(self):
        check = check_partial_geometry(extract_lines(petersen(), PETERSEN, 3))
        self.assertIsNone(check.pg)
        self.assertEqual(check.witness['axiom'], 'T')
        self.assertEqual(check.witness['line'], [0, 1])

    def test_every_point_of_a_partial_geometry_is_delsarte(self):
        sp = StandardParams(15, 8, 4, 4)
        ls = delsarte_lines(triangular(6), sp)
        self.assertEqual(is_partial_geometry(ls), PgParams(5, 2, 2))
        audit = audit_lines(ls, sp)
        self.assertEqual(len(audit.delsarte_vertices), 15)

    def test_pairs_on_a_line_are_adjacent(self):
        ls = delsarte_lines(triangular(5), T5)
        for line in ls.lines:
            for u, w in combinations(line, 2):
                self.assertTrue(ls.graph.adjacent(u, w))
