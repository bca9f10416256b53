from graphs.io import read_graph
from graphs.serializers import LineAuditSerializer, LineSystemSerializer
from graphs.services import audit_lines, verify_srg
from parameters.serializers import StandardParamsSerializer
from reports.services import line_system
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Extract the lines of a strongly regular graph and audit them.'

    def add_arguments(self, parser):
        parser.add_argument('path')
        parser.add_argument('--sigma', type=int,
                            help='Lines are the large maximal cliques for this sigma; without it, the Delsarte cliques.')
        parser.add_argument('--override', action='store_true',
                            help='Extract even when the Metsch conditions fail for sigma.')

    def run(self, **options):
        sigma = options['sigma']
        if sigma is not None and sigma < 1:
            return CommandResponse.bad_request('--sigma must be positive')

        g = read_graph(options['path'])
        sp = verify_srg(g)
        ls = line_system(g, sp, sigma, options['override'])
        audit = audit_lines(ls, sp)
        result = {
            'parameters': StandardParamsSerializer(sp).data,
            'lines': LineSystemSerializer(ls).data,
            'audit': LineAuditSerializer(audit).data,
        }
        if not audit.passed:
            return CommandResponse.property_failure(result, 'line audit failed: %s' % ', '.join(sorted(audit.witnesses)))
        return CommandResponse.success(result)
