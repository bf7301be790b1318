from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

SETTINGS_PREFIX = "PACKED_WORDS_"

DEFAULTS = {
    "ENUMERATION_CAP": 8,
    "WORD_DEGREE_CAP": 7,
    "COMPOSITION_DEGREE_CAP": 10,
    "SERIES_ORDER": 8,
    "DEFAULT_SEED": 0,
}


def get_setting(name):
    """
    Read ``PACKED_WORDS_<name>`` from the Django settings, falling back to
    the module default when no settings module is configured.
    """
    default = DEFAULTS[name]
    try:
        return getattr(settings, SETTINGS_PREFIX + name, default)
    except ImproperlyConfigured:
        return default
