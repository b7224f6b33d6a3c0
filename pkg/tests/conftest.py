from __future__ import print_function, division, absolute_import

import matplotlib
matplotlib.use("Agg")

import pytest

from screenpipes.geometry import bbox
from screenpipes.config import heuristic_config
from screenpipes.input.screen import detected_element, screen
from screenpipes.synthgen import gen_spec, generate_corpus


def make_element(id, box, ui_type="Text", **kwargs):
    """ Element from a plain (l, t, r, b) tuple. """
    return detected_element(id, bbox(*box), ui_type, **kwargs)


@pytest.fixture
def el():
    return make_element


@pytest.fixture
def config():
    return heuristic_config()


@pytest.fixture
def make_screen():
    def build(elements, screen_id="s0", raster=None, width_px=390,
              height_px=844):
        return screen(screen_id, width_px, height_px, elements, raster=raster)

    return build


@pytest.fixture(scope="session")
def clean_corpus():
    """ Noise-free corpus with rendered rasters. """
    return generate_corpus(gen_spec.noiseless(seed=7, n_screens=60),
                           render=True)


@pytest.fixture(scope="session")
def noisy_corpus():
    return generate_corpus(gen_spec(seed=11, n_screens=60))
