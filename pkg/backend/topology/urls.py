# topology/urls.py

from django.urls import path

from .views import (
    BasisCheckView,
    ClassifyView,
    CobordismNormalizeView,
    DegreeBoundView,
    DiagramReduceView,
    ExpressView,
    IntersectView,
    LensTableView,
    Pi1View,
)

urlpatterns = [
    path('intersect/', IntersectView.as_view(), name='intersect'),
    path('degree-bound/', DegreeBoundView.as_view(), name='degree-bound'),
    path('express/', ExpressView.as_view(), name='express'),
    path('basis-check/', BasisCheckView.as_view(), name='basis-check'),
    path('diagram-reduce/', DiagramReduceView.as_view(), name='diagram-reduce'),
    path('pi1/', Pi1View.as_view(), name='pi1'),
    path('classify/', ClassifyView.as_view(), name='classify'),
    path('cobordism-normalize/', CobordismNormalizeView.as_view(), name='cobordism-normalize'),
    path('lens-table/', LensTableView.as_view(), name='lens-table'),
]
