from django.apps import AppConfig


class BraidsConfig(AppConfig):
    name = 'braidosc.braids'
    verbose_name = "Braid group representations"
