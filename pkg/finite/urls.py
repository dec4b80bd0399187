from django.urls import path

from .views import BruteForceProbabilityView, ExactProbabilityView

app_name = "finite"

urlpatterns = [
    path("exact/", ExactProbabilityView.as_view(), name="exact"),
    path("brute/", BruteForceProbabilityView.as_view(), name="brute"),
]
