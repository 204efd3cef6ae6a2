from django.apps import AppConfig


class ScansConfig(AppConfig):
    name = "wigner.scans"
    verbose_name = "Phase-space scans"
