# -*- coding: utf-8 -*-
#
# Sphinx configuration for django_packed_words.

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "tests.settings")

import django  # noqa: E402

django.setup()

import django_packed_words  # noqa: E402

# -- General configuration -----------------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode"]
templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "django_packed_words"
copyright = "2026, django-packed-words contributors"

version = django_packed_words.__version__
release = django_packed_words.__version__

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# -- Options for HTML output ---------------------------------------------------

html_theme = "default"
html_static_path = ["_static"]
htmlhelp_basename = "django-packed-wordsdoc"

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {}
latex_documents = [
    (
        "index",
        "django-packed-words.tex",
        "django_packed_words Documentation",
        "django-packed-words contributors",
        "manual",
    ),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    (
        "index",
        "django-packed-words",
        "django_packed_words Documentation",
        ["django-packed-words contributors"],
        1,
    )
]
