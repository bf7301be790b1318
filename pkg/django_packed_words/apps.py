# -*- coding: utf-8
from django.apps import AppConfig


class PackedWordsConfig(AppConfig):
    name = "django_packed_words"
    verbose_name = "Packed words"

    def ready(self):
        from . import checks  # noqa: F401
