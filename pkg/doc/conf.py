# -*- coding: utf-8 -*-
#
# sqfdepth doc

import sys, os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.todo',
              'sphinx.ext.coverage', 'sphinx.ext.mathjax']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'sqfdepth'
copyright = u'2024, the sqfdepth developers'

release = '0.1'

exclude_trees = ['_build']

add_function_parentheses = True

add_module_names = False

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinxdoc'

html_title = 'sqfdepth: depth of squarefree powers of monomial ideals'

html_short_title = 'sqfdepth'

html_static_path = ['_static']

html_show_sourcelink = True

htmlhelp_basename = 'sqfdepth'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    ('index', 'sqfdepth.tex', u'sqfdepth: depth of squarefree powers',
     u'the sqfdepth developers', 'manual'),
    ]
