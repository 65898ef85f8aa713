# topology/management/heegaard_input.py

from django.core.management.base import CommandError

from ..heegaard import build_heegaard, parse_heegaard
from ..utils import read_source


def add_diagram_arguments(command, parser):
    command.add_genus_argument(parser, required=False)
    parser.add_argument(
        'words',
        nargs='+',
        help='The k attaching words with -g k, or a single diagram file given as @path.',
    )


def diagram_from_options(options):
    """Builds the diagram from ``-g k WORD...`` or from one diagram file in the line format."""
    if options['genus'] is None:
        if len(options['words']) != 1:
            raise CommandError('Give -g k with k words, or a single @file diagram.', returncode=2)
        return parse_heegaard(read_source(options['words'][0]))
    words = [read_source(text).strip() for text in options['words']]
    return build_heegaard(options['genus'], words)
