from django.apps import AppConfig


class SpacesConfig(AppConfig):
    name = 'braidosc.spaces'
    verbose_name = "Weight spaces"
