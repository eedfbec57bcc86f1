# -*- coding: utf-8 -*-
"""
Django settings for the braidosc project.

braidosc has no database, no URLs and no templates: Django provides the
settings layer, the app registry and the management-command front end.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/dev/ref/settings/
"""
import environ

ROOT_DIR = environ.Path(__file__) - 3  # (braidosc/config/settings/common.py - 3 = braidosc/)
APPS_DIR = ROOT_DIR.path('braidosc')

env = environ.Env()
env.read_env()

# APP CONFIGURATION
# ------------------------------------------------------------------------------
DJANGO_APPS = (
    'django.contrib.contenttypes',
)
THIRD_PARTY_APPS = ()

# Apps specific for this project go here.
LOCAL_APPS = (
    'braidosc.algebra.apps.AlgebraConfig',
    'braidosc.spaces.apps.SpacesConfig',
    'braidosc.braids.apps.BraidsConfig',
    'braidosc.verification.apps.VerificationConfig',
)

# See: https://docs.djangoproject.com/en/dev/ref/settings/#installed-apps
INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

# DEBUG
# ------------------------------------------------------------------------------
# See: https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = env.bool('DJANGO_DEBUG', False)

# DATABASE CONFIGURATION
# ------------------------------------------------------------------------------
# Nothing is persisted beyond the output files of the management commands.
DATABASES = {}

# GENERAL CONFIGURATION
# ------------------------------------------------------------------------------
TIME_ZONE = 'UTC'
LANGUAGE_CODE = 'en-us'
USE_I18N = False
USE_TZ = True

# NUMERIC CONFIGURATION
# ------------------------------------------------------------------------------
# Decimal digits of the numeric backend. 15 means native doubles; anything
# above switches to mpmath (values below 50 are raised to 50).
BRAIDOSC_PRECISION = env.int('BRAIDOSC_PRECISION', default=15)

BRAIDOSC_TOLERANCES = {
    'zero_abs': env.float('BRAIDOSC_TOL_ZERO_ABS', default=1e-12),
    'zero_rel': env.float('BRAIDOSC_TOL_ZERO_REL', default=1e-10),
    'rank_rel': env.float('BRAIDOSC_TOL_RANK_REL', default=1e-10),
    'kernel_residual': env.float('BRAIDOSC_TOL_KERNEL_RESIDUAL', default=1e-9),
    'span': env.float('BRAIDOSC_TOL_SPAN', default=1e-8),
    'route': env.float('BRAIDOSC_TOL_ROUTE', default=1e-8),
    'braid': env.float('BRAIDOSC_TOL_BRAID', default=1e-9),
    'inverse': env.float('BRAIDOSC_TOL_INVERSE', default=1e-9),
    'identity': env.float('BRAIDOSC_TOL_IDENTITY', default=1e-10),
    'series': env.float('BRAIDOSC_TOL_SERIES', default=1e-12),
    'casimir': env.float('BRAIDOSC_TOL_CASIMIR', default=1e-8),
    'fixture': env.float('BRAIDOSC_TOL_FIXTURE', default=1e-10),
}

# Random parameter draws of the verification suites.
BRAIDOSC_SEED = env.int('BRAIDOSC_SEED', default=42)
BRAIDOSC_DRAWS = env.int('BRAIDOSC_DRAWS', default=5)
BRAIDOSC_PARAMETER_RANGES = {
    'q': (0.3, 0.9),
    'gamma': (0.5, 2.5),
    'c': (0.2, 3.0),
}

# Thread pool size for suites and matrix assembly.
BRAIDOSC_WORKERS = env.int('BRAIDOSC_WORKERS', default=1)

# LOGGING CONFIGURATION
# ------------------------------------------------------------------------------
# See: https://docs.djangoproject.com/en/dev/ref/settings/#logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(module)s '
                      '%(process)d %(thread)d %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'braidosc': {
            'handlers': ['console'],
            'level': env('BRAIDOSC_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    }
}
