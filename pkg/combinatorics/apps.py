from django.apps import AppConfig


class CombinatoricsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "combinatorics"
