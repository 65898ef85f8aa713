from ..base import TopologyCommand
from ..heegaard_input import add_diagram_arguments, diagram_from_options
from ...reports import classify_report


def _flag(value):
    return 'yes' if value else 'no'


class Command(TopologyCommand):
    help = 'Classifies a manifold whose attaching words are in block form.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_diagram_arguments(self, parser)

    def compute(self, options):
        return classify_report(diagram_from_options(options))

    def render(self, payload):
        if not payload['decided']:
            return f"pi1: undecided ({payload['diagnostics']})\nH1: {payload['homology']}"
        return '\n'.join([
            f"pi1: {payload['pi1']}",
            f"sigma: ({' '.join(str(s) for s in payload['sigma'])})",
            f"orders: {', '.join(str(r) for r in payload['orders'])}",
            f"simply connected: {_flag(payload['simply_connected'])}",
            f"finite: {_flag(payload['finite'])}",
            f"prime: {_flag(payload['prime'])}",
            f"H1: {payload['homology']}",
        ])
