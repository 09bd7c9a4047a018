#!/usr/bin/env python3
# built-in
import os
import sys
from datetime import date
from pathlib import Path

# external
import alabaster

# app
from activenav import __version__

_docs_dir = Path(__file__).parent.resolve()
_root_dir = _docs_dir.parent
_package = _root_dir / 'activenav'
_apidoc_dst = _docs_dir / 'apidoc'

sys.path.append(os.path.abspath('../'))
extensions = [
    'alabaster',
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'myst_parser',
]

templates_path = []
source_suffix = ['.rst', '.md']
root_doc = 'index'

project = 'ActiveNav'
copyright = '{}, ActiveNav developers'.format(date.today().year)
author = 'ActiveNav developers'

version = __version__
release = version

language = 'en'
exclude_patterns = []
todo_include_todos = True

pygments_style = 'sphinx'
html_theme = 'alabaster'
html_theme_path = [alabaster.get_path()]
html_static_path = []
html_theme_options = {
    'description': 'Vision-language navigation agent that explores before it commits.',

    'sidebar_width': '240px',
    'show_powered_by': 'false',
    'caption_font_size': '20px',
}


# -- autodoc config ---------------------------------------------------
autoclass_content = 'both'

# -- napoleon config ---------------------------------------------------
napoleon_google_docstring = True
napoleon_include_init_with_doc = True
napoleon_include_private_with_doc = True
napoleon_preprocess_types = True
napoleon_attr_annotations = True

# -- Options for HTMLHelp output ------------------------------------------

# Output file base name for HTML help builder.
htmlhelp_basename = 'activenavdoc'


# -- Options for LaTeX output ---------------------------------------------

# Grouping the document tree into LaTeX files. List of tuples
# (source start file, target name, title,
#  author, documentclass [howto, manual, or own class]).
latex_documents = [
    (root_doc, 'activenav.tex', 'ActiveNav Documentation',
     author, 'manual'),
]


# -- Options for manual page output ---------------------------------------

# One entry per manual page. List of tuples
# (source start file, name, description, authors, manual section).
man_pages = [(root_doc, 'activenav', 'ActiveNav Documentation', [author], 1)]


# -- Options for Texinfo output -------------------------------------------

# Grouping the document tree into Texinfo files. List of tuples
# (source start file, target name, title, author,
#  dir menu entry, description, category)
texinfo_documents = [
    (root_doc, 'activenav', 'ActiveNav Documentation',
     author, 'ActiveNav', 'Vision-language navigation testbed.', 'Miscellaneous'),
]


def run_apidoc(_):
    from sphinx.ext.apidoc import main as apidoc_exec

    exclude_patterns = (
        _package / '__main__.py',
    )
    apidoc_exec([
        '--separate',
        '--module-first',
        '--force',
        '--private',
        f'-o={_apidoc_dst}',
        f'{_package}',
        f'{", ".join(map(str, exclude_patterns))}',
    ])


def setup(app):
    app.connect('builder-inited', run_apidoc)
