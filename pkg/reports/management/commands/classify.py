from parameters.serializers import StandardParamsSerializer
from reports.serializers import CensusRowSerializer
from reports.services import archive, census_row
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Classify a parameter quadruple (v, k, lambda, mu): eigendata, classical parameters, bounds and verdict.'

    def add_arguments(self, parser):
        for name in ('v', 'k', 'lambda', 'mu'):
            parser.add_argument(name)
        parser.add_argument('--save', action='store_true', help='Archive the result as a census record.')

    def run(self, **options):
        serializer = StandardParamsSerializer(data={name: options[name] for name in ('v', 'k', 'lambda', 'mu')})
        if not serializer.is_valid():
            return CommandResponse.bad_request(serializer.errors)

        data = serializer.validated_data
        row = census_row(data['v'], data['k'], data['lam'], data['mu'])
        if options['save']:
            archive([row])
        return CommandResponse.success(CensusRowSerializer(row).data)
