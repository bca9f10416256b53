from pathlib import Path

from django.conf import settings

from arrays.io import read_latin_square, read_oa, write_latin_square, write_oa
from arrays.serializers import CompletionReportSerializer, OrthogonalArraySerializer
from arrays.services import complete, gen_mols_prime, latin_square_graph, latin_square_parameters, mols_to_oa, oa_to_mols
from graphs.io import write_graph
from graphs.serializers import GraphSummarySerializer
from utils.commands import ReportCommand
from utils.responses import CommandResponse


def _parameters(oa):
    v, k, lam, mu = latin_square_parameters(oa.m, oa.n)
    return {'v': v, 'k': k, 'lambda': lam, 'mu': mu}


class Command(ReportCommand):
    help = 'Orthogonal arrays: verify, convert to and from MOLS, build the Latin-square graph, complete nets.'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        verify = actions.add_parser('verify', help='Validate an OA file.')
        verify.add_argument('path')

        from_mols = actions.add_parser('from-mols', help='Build an OA from Latin-square files.')
        from_mols.add_argument('squares', nargs='+')
        from_mols.add_argument('--out', required=True)

        to_graph = actions.add_parser('to-graph', help='Write the Latin-square graph of an OA.')
        to_graph.add_argument('path')
        to_graph.add_argument('--out', required=True)

        to_mols = actions.add_parser('to-mols', help='Split an OA into Latin-square files.')
        to_mols.add_argument('path')
        to_mols.add_argument('--out-dir', required=True)

        completion = actions.add_parser('complete', help='Extend an OA(m, n) to a full OA(n+1, n).')
        completion.add_argument('path')
        completion.add_argument('--out', help='Defaults to the input path with a .full.oa suffix.')

        gen = actions.add_parser('gen-mols', help='Cyclic MOLS of prime order.')
        gen.add_argument('--order', type=int, required=True)
        gen.add_argument('--count', type=int, required=True)
        gen.add_argument('--out-dir', required=True)

    def run(self, **options):
        handler = getattr(self, 'run_' + options['action'].replace('-', '_'))
        return handler(**options)

    def run_verify(self, path, **options):
        oa = read_oa(path)
        return CommandResponse.success({'array': OrthogonalArraySerializer(oa).data, 'graph_parameters': _parameters(oa)})

    def run_from_mols(self, squares, out, **options):
        oa = mols_to_oa([read_latin_square(path) for path in squares])
        write_oa(oa, out)
        return CommandResponse.success({'array': OrthogonalArraySerializer(oa).data, 'path': str(out)})

    def run_to_graph(self, path, out, **options):
        oa = read_oa(path)
        g = latin_square_graph(oa)
        write_graph(g, out)
        return CommandResponse.success({
            'graph': GraphSummarySerializer(g).data,
            'graph_parameters': _parameters(oa),
            'path': str(out),
        })

    def run_to_mols(self, path, out_dir, **options):
        oa = read_oa(path)
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for index, square in enumerate(oa_to_mols(oa), start=1):
            target = directory / ('square_%d.ls' % index)
            write_latin_square(square, target)
            paths.append(str(target))
        return CommandResponse.success({'array': OrthogonalArraySerializer(oa).data, 'paths': paths})

    def run_complete(self, path, out=None, **options):
        oa = read_oa(path)
        full, report = complete(oa)
        target = Path(out) if out else Path(path).with_suffix(settings.SRGFORGE['FULL_OA_SUFFIX'])
        write_oa(full, target)
        return CommandResponse.success({
            'report': CompletionReportSerializer(report).data,
            'array': OrthogonalArraySerializer(full).data,
            'path': str(target),
        })

    def run_gen_mols(self, order, count, out_dir, **options):
        squares = gen_mols_prime(order, count)
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for a, square in enumerate(squares, start=1):
            target = directory / ('mols_%d_%d.ls' % (order, a))
            write_latin_square(square, target)
            paths.append(str(target))
        return CommandResponse.success({'order': order, 'count': count, 'paths': paths})
