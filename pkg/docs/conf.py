# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html
import datetime
import os
import sys
import warnings

sys.path.insert(0, os.path.abspath("../src"))

# -- Project information -----------------------------------------------------
now = datetime.datetime.now()
year = now.year

project = "symdiet"
copyright = f"2024-{year}, The symdiet Developers"
author = "The symdiet Developers"

with open("../src/symdiet/__init__.py") as f:
    for line in f.readlines():
        if "__version__" in line:
            before_keyword, keyword, after_keyword = line.partition("=")
            __version__ = after_keyword.strip()[1:-1]
            break

# The short X.Y version
version = ".".join(__version__.split(".")[:2])
# The full version, including alpha/beta/rc tags
release = __version__

# -- General configuration ---------------------------------------------------
needs_sphinx = "2.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "matplotlib.sphinxext.plot_directive",
    "sphinx.ext.mathjax",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx_copybutton",
]

autosummary_generate = True

doctest_global_setup = """
from pprint import pprint
import numpy as np
"""

plot_html_show_source_link = False
plot_include_source = True
plot_rcparams = {"figure.figsize": [6, 2.5]}

warnings.filterwarnings(
    "ignore",
    category=UserWarning,
    message="Matplotlib is currently using agg, which is a"
    " non-GUI backend, so cannot show the figure.",
)

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------------
html_theme = "alabaster"
html_static_path = []
htmlhelp_basename = "symdietdoc"
