from django.apps import AppConfig


class FockConfig(AppConfig):
    name = "wigner.fock"
    verbose_name = "Fock-space linear algebra"
