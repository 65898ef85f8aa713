from ..base import TopologyCommand
from ...reports import diagram_report
from ...serializers import CrossingDiagramSerializer


class Command(TopologyCommand):
    help = 'Removes bigons from a crossing diagram until none is left.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            'diagram',
            help='JSON {"m_order": [...], "mprime_order": [...], "signs": {...}} or @path.',
        )
        parser.add_argument(
            '--exhaustive',
            action='store_true',
            help='Also list the crossing counts reachable through every removal order.',
        )

    def compute(self, options):
        d = self.deserialize(CrossingDiagramSerializer, self.json_input(options['diagram']))
        return diagram_report(d, exhaustive=options['exhaustive'])

    def render(self, payload):
        lines = [
            f"crossings: {payload['initial_count']} -> {payload['final_count']} "
            f"(algebraic sum {payload['algebraic_sum']})"
        ]
        lines += [f"removed bigon ({p}, {q})" for p, q in payload['removed']]
        if 'reachable_final_counts' in payload:
            counts = ', '.join(str(c) for c in payload['reachable_final_counts'])
            lines.append(f"reachable final counts: {counts}")
        return '\n'.join(lines)
