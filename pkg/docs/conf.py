#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# bincumulants documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.imgmath',
    'sphinx.ext.viewcode',
]

autodoc_member_order = 'bysource'

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

import bincumulants  # noqa: E402

# General information about the project.
project = 'bincumulants'
author = 'bincumulants contributors'
copyright = '2024, bincumulants contributors'

# The short X.Y version and the full version, including alpha/beta/rc tags.
version = release = bincumulants.__version__

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = []

htmlhelp_basename = 'bincumulantsdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'bincumulants.tex', 'bincumulants Documentation', author, 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'bincumulants', 'bincumulants Documentation', [author], 1)
]
