from ..base import TopologyCommand
from ...reports import lens_table_report
from ...utils import lens_max_p


class Command(TopologyCommand):
    help = 'Classifies the genus-1 diagrams a1^q b1^p for every coprime q in 1..p.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--min-p', type=int, default=1)
        parser.add_argument('--max-p', type=int, default=None, help='Defaults to CURVECAL_LENS_MAX_P.')

    def compute(self, options):
        max_p = options['max_p'] if options['max_p'] is not None else lens_max_p()
        return lens_table_report(options['min_p'], max_p)

    def render(self, payload):
        lines = [f"{'p':>3} {'q':>3}  {'pi1':<6} finite prime"]
        for row in payload['rows']:
            lines.append(
                f"{row['p']:>3} {row['q']:>3}  {row['pi1']:<6} "
                f"{'yes' if row['finite'] else 'no':<6} {'yes' if row['prime'] else 'no'}"
            )
        return '\n'.join(lines)
