# -*- coding: utf-8 -*-
'''
Test settings

- Used to run tests fast on the continuous integration server and locally
'''

from .common import *  # noqa


# DEBUG
# ------------------------------------------------------------------------------
DEBUG = False

# SECRET CONFIGURATION
# ------------------------------------------------------------------------------
# Note: This key only used for development and testing.
SECRET_KEY = env('DJANGO_SECRET_KEY', default='CHANGEME!!!')

# NUMERIC CONFIGURATION
# ------------------------------------------------------------------------------
# Tests always run on native doubles with the documented seed.
BRAIDOSC_PRECISION = 15
BRAIDOSC_SEED = 42
BRAIDOSC_DRAWS = 5
BRAIDOSC_WORKERS = 1

# TESTING
# ------------------------------------------------------------------------------
TEST_RUNNER = 'django.test.runner.DiscoverRunner'
