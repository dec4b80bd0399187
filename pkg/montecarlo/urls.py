from django.urls import path

from .views import SimulateView

app_name = "montecarlo"

urlpatterns = [
    path("simulate/", SimulateView.as_view(), name="simulate"),
]
