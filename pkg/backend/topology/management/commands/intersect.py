from ..base import TopologyCommand
from ...reports import intersect_report


class Command(TopologyCommand):
    help = 'Signed intersection number l·g of two curves given as words.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_genus_argument(parser)
        parser.add_argument('l', help='First word, e.g. "a1 b2^-3", or @path.')
        parser.add_argument('g', help='Second word, or @path.')

    def compute(self, options):
        k = options['genus']
        return intersect_report(self.word(options['l'], k), self.word(options['g'], k))

    def render(self, payload):
        return str(payload['pairing'])
