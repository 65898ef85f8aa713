# topology/views.py

import logging

from rest_framework.response import Response
from rest_framework.views import APIView

from . import reports
from .exceptions import TopologyError
from .serializers import (
    BasisCandidateSerializer,
    CobordismChainSerializer,
    CrossingDiagramSerializer,
    HeegaardSerializer,
    LensRangeSerializer,
    WordPairSerializer,
    WordSerializer,
)

logger = logging.getLogger(__name__)


class TopologyView(APIView):
    """
    Validates the request body with ``serializer_class`` and answers with
    ``report(instance)``. Domain errors become ``{'error': message}`` with status 400.
    """
    serializer_class = None

    def report(self, instance, validated_data):
        raise NotImplementedError

    def post(self, request):
        serializer = self.serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        instance = serializer.save()
        try:
            return Response(self.report(instance, serializer.validated_data))
        except TopologyError as e:
            logger.error(f"{type(self).__name__} failed: {e}")
            return Response({'error': str(e)}, status=400)


class IntersectView(TopologyView):
    serializer_class = WordPairSerializer

    def report(self, instance, validated_data):
        return reports.intersect_report(*instance)


class DegreeBoundView(TopologyView):
    serializer_class = WordPairSerializer

    def report(self, instance, validated_data):
        return reports.degree_bound_report(*instance)


class ExpressView(TopologyView):
    serializer_class = WordSerializer

    def report(self, instance, validated_data):
        return reports.express_report(instance)


class BasisCheckView(TopologyView):
    serializer_class = BasisCandidateSerializer

    def report(self, instance, validated_data):
        return reports.basis_report(instance)


class DiagramReduceView(TopologyView):
    serializer_class = CrossingDiagramSerializer

    def report(self, instance, validated_data):
        return reports.diagram_report(instance, exhaustive=validated_data['exhaustive'])


class Pi1View(TopologyView):
    serializer_class = HeegaardSerializer

    def report(self, instance, validated_data):
        return reports.pi1_report(instance)


class ClassifyView(TopologyView):
    serializer_class = HeegaardSerializer

    def report(self, instance, validated_data):
        return reports.classify_report(instance)


class CobordismNormalizeView(TopologyView):
    serializer_class = CobordismChainSerializer

    def report(self, instance, validated_data):
        return reports.normalize_report(instance)


class LensTableView(APIView):
    def get(self, request):
        serializer = LensRangeSerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=400)
        data = serializer.validated_data
        try:
            return Response(reports.lens_table_report(data['min_p'], data['max_p']))
        except TopologyError as e:
            logger.error(f"Lens table failed: {e}")
            return Response({'error': str(e)}, status=400)
