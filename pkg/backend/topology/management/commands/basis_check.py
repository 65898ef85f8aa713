from ..base import TopologyCommand
from ...intersection import BasisCandidate
from ...reports import basis_report


def _matrix(rows):
    width = max(len(str(entry)) for row in rows for entry in row)
    return '\n'.join('  '.join(str(entry).rjust(width) for entry in row) for row in rows)


class Command(TopologyCommand):
    help = 'Builds the change-of-basis matrix of a candidate generator system and checks it.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_genus_argument(parser)
        parser.add_argument('--theta', nargs='+', required=True, metavar='WORD', help='The k words θ1..θk.')
        parser.add_argument('--gamma', nargs='+', required=True, metavar='WORD', help='The k words γ1..γk.')

    def compute(self, options):
        k = options['genus']
        theta = tuple(self.word(text, k) for text in options['theta'])
        gamma = tuple(self.word(text, k) for text in options['gamma'])
        return basis_report(BasisCandidate(k, theta, gamma))

    def render(self, payload):
        lines = [_matrix(payload['H']), f"det H = {payload['det']}"]
        lines.append(f"unimodular: {'yes' if payload['unimodular'] else 'no'}")
        if payload['sigma']:
            lines.append(f"sigma: ({' '.join(str(s) for s in payload['sigma'])})")
            lines.append(f"block determinants: {', '.join(str(d) for d in payload['block_determinants'])}")
        else:
            lines.append('sigma: none')
        if payload['inverse_sign'] is not None:
            lines.append(f"H·K = {'+' if payload['inverse_sign'] > 0 else '-'}E")
        lines.append(f"diagnostics: {payload['diagnostics']}")
        return '\n'.join(lines)
