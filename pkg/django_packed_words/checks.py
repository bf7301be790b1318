from django.core.checks import Error, register

from .conf import DEFAULTS, SETTINGS_PREFIX, get_setting

CAP_SETTINGS = ["ENUMERATION_CAP", "WORD_DEGREE_CAP", "COMPOSITION_DEGREE_CAP", "SERIES_ORDER"]


@register()
def check_degree_caps(app_configs, **kwargs):
    errors = []
    for name in CAP_SETTINGS:
        value = get_setting(name)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            errors.append(
                Error(
                    "%s%s must be a positive integer, got %r." % (SETTINGS_PREFIX, name, value),
                    hint="The default is %d." % DEFAULTS[name],
                    id="packed_words.E001",
                )
            )
    return errors
