from django.apps import AppConfig


class AsymptoticConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "asymptotic"
