# Sphinx configuration of the csmtutte documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import datetime

import csmtutte


# -- Project -----------------------------------------------------------------

project = 'csmtutte'
copyright = '2024-%s The csmtutte developers' % datetime.datetime.now().year
author = 'The csmtutte developers'
release = csmtutte.__version__

root_doc = 'index'


# -- Extensions --------------------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx_copybutton'
]

templates_path = ['_templates']
exclude_patterns = []
source_suffix = '.rst'
pygments_style = 'sphinx'

# API pages are generated from the reference/ stubs.
autosummary_generate = True
autodoc_typehints = 'none'
autodoc_member_order = 'bysource'

# Google-style docstrings only.
napoleon_numpy_docstring = False
napoleon_preprocess_types = True

# Strip shell and interpreter prompts on copy.
copybutton_prompt_text = r'>>> |\.\.\. |\$ '
copybutton_prompt_is_regexp = True


# -- HTML --------------------------------------------------------------------

html_theme = 'pydata_sphinx_theme'
html_title = 'csmtutte'
html_last_updated_fmt = '%Y-%m-%d'
htmlhelp_basename = 'csmtutte'
