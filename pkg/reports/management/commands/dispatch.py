from parameters.serializers import VerdictSerializer
from parameters.services import dispatch
from reports.serializers import TripleSerializer
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Decide lambda against both bounds for a smallest eigenvalue -m, without a full quadruple.'

    def add_arguments(self, parser):
        for name in ('m', 'lambda', 'mu'):
            parser.add_argument(name)

    def run(self, **options):
        serializer = TripleSerializer(data={name: options[name] for name in ('m', 'lambda', 'mu')})
        if not serializer.is_valid():
            return CommandResponse.bad_request(serializer.errors)

        data = serializer.validated_data
        return CommandResponse.success(VerdictSerializer(dispatch(data['m'], data['lam'], data['mu'])).data)
