from django.apps import AppConfig


class VerificationConfig(AppConfig):
    name = 'braidosc.verification'
    verbose_name = "Verification suites"
