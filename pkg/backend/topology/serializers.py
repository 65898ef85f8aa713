# topology/serializers.py

from rest_framework import serializers

from .cobordism import build_chain
from .diagrams import build_diagram
from .exceptions import TopologyError
from .heegaard import build_heegaard, parse_heegaard
from .intersection import BasisCandidate
from .utils import lens_max_p
from .words import parse_word
import logging

logger = logging.getLogger(__name__)


def _parsed(text, genus, field):
    try:
        return parse_word(text, genus)
    except TopologyError as e:
        raise serializers.ValidationError({field: str(e)})


class WordSerializer(serializers.Serializer):
    genus = serializers.IntegerField(min_value=1)
    word = serializers.CharField(allow_blank=True, trim_whitespace=False)

    def create(self, validated_data):
        return _parsed(validated_data['word'], validated_data['genus'], 'word')


class WordPairSerializer(serializers.Serializer):
    genus = serializers.IntegerField(min_value=1)
    l = serializers.CharField(allow_blank=True, trim_whitespace=False)
    g = serializers.CharField(allow_blank=True, trim_whitespace=False)

    def create(self, validated_data):
        genus = validated_data['genus']
        return _parsed(validated_data['l'], genus, 'l'), _parsed(validated_data['g'], genus, 'g')


class BasisCandidateSerializer(serializers.Serializer):
    genus = serializers.IntegerField(min_value=1)
    theta = serializers.ListField(child=serializers.CharField(allow_blank=True, trim_whitespace=False))
    gamma = serializers.ListField(child=serializers.CharField(allow_blank=True, trim_whitespace=False))

    def validate(self, data):
        k = data['genus']
        for field in ('theta', 'gamma'):
            if len(data[field]) != k:
                raise serializers.ValidationError({field: f"Expected {k} words, got {len(data[field])}."})
        return data

    def create(self, validated_data):
        k = validated_data['genus']
        theta = tuple(_parsed(text, k, 'theta') for text in validated_data['theta'])
        gamma = tuple(_parsed(text, k, 'gamma') for text in validated_data['gamma'])
        return BasisCandidate(k, theta, gamma)


class CrossingDiagramSerializer(serializers.Serializer):
    m_order = serializers.ListField(child=serializers.CharField())
    mprime_order = serializers.ListField(child=serializers.CharField())
    signs = serializers.DictField(child=serializers.IntegerField())
    exhaustive = serializers.BooleanField(default=False, required=False)

    def validate_signs(self, value):
        bad = sorted(id for id, sign in value.items() if sign not in (1, -1))
        if bad:
            raise serializers.ValidationError(f"Signs must be +1 or -1 (crossings {', '.join(bad)}).")
        return value

    def create(self, validated_data):
        try:
            return build_diagram(validated_data['m_order'], validated_data['mprime_order'], validated_data['signs'])
        except TopologyError as e:
            raise serializers.ValidationError({'diagram': str(e)})


class HeegaardSerializer(serializers.Serializer):
    """Either ``genus`` with ``attaching`` words, or ``text`` in the line-oriented diagram format."""
    genus = serializers.IntegerField(min_value=1, required=False)
    attaching = serializers.ListField(
        child=serializers.CharField(allow_blank=True, trim_whitespace=False),
        required=False,
    )
    text = serializers.CharField(required=False)

    def validate(self, data):
        if 'text' not in data and ('genus' not in data or 'attaching' not in data):
            raise serializers.ValidationError("Provide either 'text' or both 'genus' and 'attaching'.")
        return data

    def create(self, validated_data):
        try:
            if 'text' in validated_data:
                return parse_heegaard(validated_data['text'])
            return build_heegaard(validated_data['genus'], validated_data['attaching'])
        except TopologyError as e:
            raise serializers.ValidationError({'diagram': str(e)})


class CriticalRecordSerializer(serializers.Serializer):
    id = serializers.CharField()
    index = serializers.IntegerField(min_value=0, max_value=3)
    incidence = serializers.DictField(child=serializers.IntegerField(), required=False, default=dict)


class CobordismChainSerializer(serializers.Serializer):
    records = serializers.ListField(child=CriticalRecordSerializer(), allow_empty=False)

    def create(self, validated_data):
        try:
            return build_chain(validated_data['records'])
        except TopologyError as e:
            raise serializers.ValidationError({'records': str(e)})


class LensRangeSerializer(serializers.Serializer):
    min_p = serializers.IntegerField(min_value=1, default=1)
    max_p = serializers.IntegerField(min_value=1, required=False)

    def validate(self, data):
        data.setdefault('max_p', lens_max_p())
        if data['max_p'] < data['min_p']:
            raise serializers.ValidationError({'max_p': "Must not be smaller than min_p."})
        return data
