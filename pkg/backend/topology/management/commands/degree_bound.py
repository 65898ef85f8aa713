from ..base import TopologyCommand
from ...reports import degree_bound_report


class Command(TopologyCommand):
    help = 'Lower bound on the number of crossings of two curves, from their abelianized coordinates.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_genus_argument(parser)
        parser.add_argument('l')
        parser.add_argument('g')

    def compute(self, options):
        k = options['genus']
        return degree_bound_report(self.word(options['l'], k), self.word(options['g'], k))

    def render(self, payload):
        return str(payload['degree_lower_bound'])
