"""Look up simulation settings without requiring a configured Django.

The numerical modules are plain functions that can be imported from a
notebook; when Django settings are unavailable they use the module default.
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


def get_setting(name, default):
    """Return ``settings.<name>``, or *default* if unset or unconfigured."""
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default


def resolve(value, name, default):
    """Return *value* unless it is None, else the setting *name*."""
    if value is not None:
        return value
    return get_setting(name, default)
