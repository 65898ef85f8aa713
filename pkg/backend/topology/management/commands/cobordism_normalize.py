from ..base import TopologyCommand
from ...reports import normalize_report
from ...serializers import CobordismChainSerializer


def _type(vector):
    return '{' + ','.join(str(r) for r in vector) + '}'


class Command(TopologyCommand):
    help = 'Cancels critical points of a cobordism chain that meet exactly once.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('chain', help='JSON {"records": [{"id", "index", "incidence"}, ...]} or @path.')

    def compute(self, options):
        chain = self.deserialize(CobordismChainSerializer, self.json_input(options['chain']))
        return normalize_report(chain)

    def render(self, payload):
        lines = [f"type {_type(payload['initial_type'])} -> {_type(payload['final_type'])}"]
        for move in payload['moves']:
            lower, upper = move['cancel']
            i, j = move['indices']
            lines.append(f"cancel {lower} ({i}) / {upper} ({j}) -> {_type(move['type_after'])}")
        return '\n'.join(lines)
