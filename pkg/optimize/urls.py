from django.urls import path

from .views import BestCutoffView, BestFractionView, TableView

app_name = "optimize"

urlpatterns = [
    path("best-cutoff/", BestCutoffView.as_view(), name="best-cutoff"),
    path("best-fraction/", BestFractionView.as_view(), name="best-fraction"),
    path("table/", TableView.as_view(), name="table"),
]
