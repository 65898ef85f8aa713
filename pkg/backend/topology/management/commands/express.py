from ..base import TopologyCommand
from ...reports import express_report


class Command(TopologyCommand):
    help = 'Writes a curve as an integer combination of the canonical generators.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_genus_argument(parser)
        parser.add_argument('word')

    def compute(self, options):
        return express_report(self.word(options['word'], options['genus']))

    def render(self, payload):
        return payload['linear_expression']
