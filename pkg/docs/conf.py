#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# bulsol documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
from typing import Dict

import sphinx_rtd_theme

# Insert the project root dir as the first element in the PYTHONPATH,
# so that the source package and its version are used.
cwd = os.getcwd()
project_root = os.path.dirname(cwd)
sys.path.insert(0, project_root)

from bulsol.__version__ import __version__  # noqa

# -- General configuration ---------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode", "sphinx.ext.mathjax"]
templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "Bulsol"
copyright = "2026, The bulsol developers"

version = __version__
release = __version__

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = "bulsoldoc"

# -- Options for LaTeX output ------------------------------------------

latex_elements: Dict[str, str] = {}

latex_documents = [
    (
        "index",
        "bulsol.tex",
        "Bulsol Documentation",
        "The bulsol developers",
        "manual",
    ),
]

# -- Options for manual page output ------------------------------------

man_pages = [("index", "bulsol", "Bulsol Documentation", ["The bulsol developers"], 1)]
