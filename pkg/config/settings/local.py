# -*- coding: utf-8 -*-
"""
Local settings

- Run in Debug mode
- Log suite progress and route diagnostics
"""
from .common import *  # noqa

# DEBUG
# ------------------------------------------------------------------------------
DEBUG = env.bool('DJANGO_DEBUG', default=True)

# SECRET CONFIGURATION
# ------------------------------------------------------------------------------
# Note: This key only used for development and testing.
SECRET_KEY = env('DJANGO_SECRET_KEY', default='x8%v0l!braidosc-local-only-3m#q7t@z1c^k2')

# LOGGING
# ------------------------------------------------------------------------------
LOGGING['loggers']['braidosc']['level'] = env('BRAIDOSC_LOG_LEVEL', default='INFO')

# Your local stuff: Below this line define 3rd party library settings
# ------------------------------------------------------------------------------
