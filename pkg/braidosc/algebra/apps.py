import mpmath
from django.apps import AppConfig
from django.conf import settings


class AlgebraConfig(AppConfig):
    name = 'braidosc.algebra'
    verbose_name = "Oscillator algebra"

    def ready(self):
        """Configure the extended-precision context once per process."""
        digits = getattr(settings, 'BRAIDOSC_PRECISION', 15)
        if digits > 15:
            mpmath.mp.dps = max(digits, 50)
