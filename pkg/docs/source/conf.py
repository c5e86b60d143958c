# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information
import os
import sys
sys.path.insert(0, os.path.abspath('../../'))


project = 'Conjugate Code Construction'
copyright = '2024 TriHard Studios'
author = 'Gregory Bell'
release = '2.0.0'

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration
# sphinx-apidoc -o source/ ../<module>
extensions = [
    'sphinx.ext.autodoc',
    'sphinx_autodoc_typehints',
]
source_suffix = [
    '.rst',
]
master_doc = "masterTocTree"


templates_path = ['_templates']
exclude_patterns = [
    'docs/*',
    'config/*',
    'output/*',
    'bundles/*',
]
always_document_param_types = True

# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

# https://sphinx-themes.org/sample-sites/furo/
html_theme = 'furo'
html_static_path = []
