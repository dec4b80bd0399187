from django.apps import AppConfig


class FiniteConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "finite"
