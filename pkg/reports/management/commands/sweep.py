from reports.serializers import CensusRowSerializer
from reports.services import archive, census_rows_tsv, sweep
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Classify every parameter quadruple with v up to --v-max that satisfies the counting identity.'

    def add_arguments(self, parser):
        parser.add_argument('--v-max', type=int, required=True)
        parser.add_argument('--all', action='store_true', dest='include_all',
                            help='Keep quadruples failing the integrality conditions.')
        parser.add_argument('--save', action='store_true', help='Archive every row as a census record.')
        parser.add_argument('--format', choices=['json', 'tsv'], default='json')

    def run(self, **options):
        if options['v_max'] < 1:
            return CommandResponse.bad_request('--v-max must be positive')

        rows = sweep(options['v_max'], include_all=options['include_all'])
        archived = archive(rows) if options['save'] else None
        if options['format'] == 'tsv':
            return CommandResponse.table(census_rows_tsv(rows))

        result = {'v_max': options['v_max'], 'count': len(rows), 'rows': CensusRowSerializer(rows, many=True).data}
        if archived is not None:
            result['archived'] = archived
        return CommandResponse.success(result)
