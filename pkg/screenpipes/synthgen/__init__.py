from __future__ import print_function, division, absolute_import

from .gen_spec import gen_spec
from .render import render_raster
from .noise import perturb, detection_view
from .corpus import (synthetic_screen, generate_screen, generate_corpus,
                     write_corpus, sample_icons)
