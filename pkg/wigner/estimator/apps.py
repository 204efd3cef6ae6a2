from django.apps import AppConfig


class EstimatorConfig(AppConfig):
    name = "wigner.estimator"
    verbose_name = "Monte Carlo parity estimator"
