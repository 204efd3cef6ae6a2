from django.apps import AppConfig


class QuasiprobConfig(AppConfig):
    name = "wigner.quasiprob"
    verbose_name = "s-ordered quasidistributions"
