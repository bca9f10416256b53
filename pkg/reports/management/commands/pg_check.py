from graphs.io import read_graph
from graphs.serializers import LineSystemSerializer, PartialGeometryCheckSerializer
from graphs.services import check_partial_geometry, verify_srg
from parameters.serializers import StandardParamsSerializer
from parameters.services import pg_point_graph
from reports.services import line_system
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Decide whether the lines of a strongly regular graph form a partial geometry.'

    def add_arguments(self, parser):
        parser.add_argument('path')
        parser.add_argument('--sigma', type=int, help='Use the Metsch lines for this sigma instead of the Delsarte cliques.')
        parser.add_argument('--override', action='store_true')

    def run(self, **options):
        g = read_graph(options['path'])
        sp = verify_srg(g)
        ls = line_system(g, sp, options['sigma'], options['override'])
        check = check_partial_geometry(ls)
        result = {
            'parameters': StandardParamsSerializer(sp).data,
            'lines': LineSystemSerializer(ls).data,
            'partial_geometry': PartialGeometryCheckSerializer(check).data,
        }
        if check.pg is None:
            return CommandResponse.property_failure(result, 'not a partial geometry (axiom %s)' % check.witness['axiom'])

        result['point_graph_matches'] = pg_point_graph(check.pg) == sp
        return CommandResponse.success(result)
