"""
URL configuration for secretary_engine project.

Every computation is a read-only GET endpoint under /api/.
"""

from django.urls import include, path
from drf_spectacular.views import (
    SpectacularAPIView,
    SpectacularRedocView,
    SpectacularSwaggerView,
)

urlpatterns = [
    # API Schema
    path("api/schema/", SpectacularAPIView.as_view(), name="schema"),
    # API Documentation UIs
    path(
        "api/docs/",
        SpectacularSwaggerView.as_view(url_name="schema"),
        name="swagger-ui",
    ),
    path(
        "api/redoc/",
        SpectacularRedocView.as_view(url_name="schema"),
        name="redoc",
    ),
    path("api/", include("finite.urls")),
    path("api/", include("asymptotic.urls")),
    path("api/", include("montecarlo.urls")),
    path("api/", include("optimize.urls")),
]
