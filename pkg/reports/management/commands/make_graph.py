from graphs.generators import GENERATORS
from graphs.io import format_graph, write_graph
from graphs.serializers import GraphSummarySerializer
from utils.commands import ReportCommand
from utils.responses import CommandResponse

# generators taking an order
SIZED = {'triangular', 'rook', 'cycle', 'complete', 'paley', 'random'}


class Command(ReportCommand):
    help = 'Write a named graph in the graph text format.'

    def add_arguments(self, parser):
        parser.add_argument('name', choices=sorted(GENERATORS))
        parser.add_argument('--n', type=int, help='Order parameter of the family.')
        parser.add_argument('--p', type=float, default=0.5, help='Edge probability for random graphs.')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--out', help='Write here and print a summary; otherwise print the graph.')

    def run(self, **options):
        name, n = options['name'], options['n']
        if n is not None and name not in SIZED:
            return CommandResponse.bad_request('%s takes no --n' % name)
        if name == 'random' and n is None:
            return CommandResponse.bad_request('random needs --n')

        try:
            if name == 'random':
                g = GENERATORS[name](n, options['p'], options['seed'])
            elif n is not None:
                g = GENERATORS[name](n)
            else:
                g = GENERATORS[name]()
        except ValueError as error:
            return CommandResponse.bad_request(str(error))

        if not options['out']:
            return CommandResponse.table(format_graph(g))
        write_graph(g, options['out'])
        return CommandResponse.success({'name': name, 'graph': GraphSummarySerializer(g).data, 'path': options['out']})
