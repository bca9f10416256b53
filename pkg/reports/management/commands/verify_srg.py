from graphs.io import read_graph
from graphs.serializers import GraphSummarySerializer
from graphs.services import is_primitive, verify_srg
from parameters.serializers import StandardParamsSerializer
from utils.commands import ReportCommand
from utils.responses import CommandResponse


class Command(ReportCommand):
    help = 'Check that a graph file is strongly regular and report its parameters.'

    def add_arguments(self, parser):
        parser.add_argument('path')

    def run(self, **options):
        g = read_graph(options['path'])
        sp = verify_srg(g)
        return CommandResponse.success({
            'graph': GraphSummarySerializer(g).data,
            'parameters': StandardParamsSerializer(sp).data,
            'primitive': is_primitive(g),
        })
