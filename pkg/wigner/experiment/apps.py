from django.apps import AppConfig


class ExperimentConfig(AppConfig):
    name = "wigner.experiment"
    verbose_name = "Photon-counting experiment model"
