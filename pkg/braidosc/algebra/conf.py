"""
Access to the numeric configuration.

Every value has a default here so the library also works with bare
settings; see config/settings/common.py for the environment variables.
"""
import contextlib
import contextvars

from django.conf import settings

DEFAULT_TOLERANCES = {
    'zero_abs': 1e-12,
    'zero_rel': 1e-10,
    'rank_rel': 1e-10,
    'kernel_residual': 1e-9,
    'span': 1e-8,
    'route': 1e-8,
    'braid': 1e-9,
    'inverse': 1e-9,
    'identity': 1e-10,
    'series': 1e-12,
    'casimir': 1e-8,
    'fixture': 1e-10,
}

DEFAULT_PARAMETER_RANGES = {
    'q': (0.3, 0.9),
    'gamma': (0.5, 2.5),
    'c': (0.2, 3.0),
}

_overrides = contextvars.ContextVar('braidosc_tolerance_overrides', default={})


def precision():
    return getattr(settings, 'BRAIDOSC_PRECISION', 15)


def extended_precision():
    return precision() > 15


def tolerance(key):
    overridden = _overrides.get()
    if key in overridden:
        return overridden[key]
    configured = getattr(settings, 'BRAIDOSC_TOLERANCES', {})
    return configured.get(key, DEFAULT_TOLERANCES[key])


@contextlib.contextmanager
def override_tolerances(**values):
    unknown = set(values) - set(DEFAULT_TOLERANCES)
    if unknown:
        raise KeyError('Unknown tolerance(s): {}'.format(', '.join(sorted(unknown))))
    merged = dict(_overrides.get())
    merged.update(values)
    token = _overrides.set(merged)
    try:
        yield
    finally:
        _overrides.reset(token)


def seed():
    return getattr(settings, 'BRAIDOSC_SEED', 42)


def draws():
    return getattr(settings, 'BRAIDOSC_DRAWS', 5)


def workers():
    return max(1, getattr(settings, 'BRAIDOSC_WORKERS', 1))


def parameter_ranges():
    return getattr(settings, 'BRAIDOSC_PARAMETER_RANGES', DEFAULT_PARAMETER_RANGES)
