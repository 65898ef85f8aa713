# topology/management/base.py

import json
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from ..exceptions import TopologyError
from ..utils import extract_json, read_source
from ..words import parse_word

logger = logging.getLogger(__name__)


def flatten_errors(detail):
    """Joins DRF validation details into one line."""
    if isinstance(detail, dict):
        return '; '.join(f"{field}: {flatten_errors(value)}" for field, value in detail.items())
    if isinstance(detail, list):
        return ' '.join(flatten_errors(item) for item in detail)
    return str(detail)


class TopologyCommand(BaseCommand):
    """
    Base for the curve calculus commands.

    Subclasses implement ``compute(options)`` returning the JSON payload and
    ``render(payload)`` returning the text form. Domain errors exit with
    status 1, usage errors with status 2.
    """
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Emit the result as JSON.')

    def add_genus_argument(self, parser, required=True):
        parser.add_argument('-g', '--genus', type=int, required=required, help='Genus k of the surface.')

    def compute(self, options):
        raise NotImplementedError

    def render(self, payload):
        raise NotImplementedError

    def word(self, text, genus):
        return parse_word(read_source(text).strip(), genus)

    def json_input(self, text):
        return extract_json(read_source(text))

    def deserialize(self, serializer_class, data):
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            raise TopologyError(flatten_errors(serializer.errors))
        return serializer.save()

    def handle(self, *args, **options):
        try:
            payload = self.compute(options)
        except TopologyError as e:
            logger.error(f"{self.__module__.rsplit('.', 1)[-1]} failed: {e}")
            raise CommandError(str(e), returncode=1)
        except serializers.ValidationError as e:
            logger.error(f"Invalid input: {e.detail}")
            raise CommandError(flatten_errors(e.detail), returncode=1)

        if options['json']:
            self.stdout.write(json.dumps(payload, ensure_ascii=False))
        else:
            self.stdout.write(self.render(payload))
