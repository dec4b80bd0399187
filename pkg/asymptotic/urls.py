from django.urls import path

from .views import CurveView, LimitView

app_name = "asymptotic"

urlpatterns = [
    path("limit/", LimitView.as_view(), name="limit"),
    path("curve/", CurveView.as_view(), name="curve"),
]
