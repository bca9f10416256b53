from parameters.services import mu_upper_bound
from reports.serializers import BoundRowSerializer
from reports.services import bound_rows_tsv, census_table
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Tabulate both lambda bounds for every admissible mu at a fixed m.'

    def add_arguments(self, parser):
        parser.add_argument('--m', type=int, required=True)
        parser.add_argument('--mu-max', type=int, help='Stop the table at this mu.')
        parser.add_argument('--lambda-mode', action='store_true',
                            help='Add the smallest integer lambda exceeding each bound.')
        parser.add_argument('--format', choices=['json', 'tsv'], default='json')

    def run(self, **options):
        m, mu_max, lambda_mode = options['m'], options['mu_max'], options['lambda_mode']
        if m < 3:
            return CommandResponse.bad_request('the census needs m >= 3, got %d' % m)
        if mu_max is not None and mu_max < 1:
            return CommandResponse.bad_request('--mu-max must be positive')

        rows = census_table(m, mu_max, lambda_mode)
        if options['format'] == 'tsv':
            return CommandResponse.table(bound_rows_tsv(rows, lambda_mode))
        return CommandResponse.success({
            'm': m,
            'mu_upper_bound': mu_upper_bound(m),
            'rows': BoundRowSerializer(rows, many=True).data,
        })
