from ..base import TopologyCommand
from ..heegaard_input import add_diagram_arguments, diagram_from_options
from ...reports import pi1_report


class Command(TopologyCommand):
    help = 'Presentation of the fundamental group of a manifold given by attaching words.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_diagram_arguments(self, parser)

    def compute(self, options):
        return pi1_report(diagram_from_options(options))

    def render(self, payload):
        return '\n'.join([
            payload['presentation'],
            f"pi1: {payload['pi1']}",
            f"H1: {payload['homology']}",
        ])
