from __future__ import print_function, division, absolute_import

import os
import numpy as np

from loguru import logger

from ..geometry import bbox
from ..input.screen import detected_element, screen
from ..input.loading import save_screens, save_ocr, save_png
from ..structure.tree import accessibility_tree, save_trees
from .. import utils

from .templates import (canvas, templates, icon_vocabulary,
                        planted_clickable, content_top, content_floor)
from .noise import perturb
from .render import render_raster


class synthetic_screen(object):
    """ One generated screen: ground truth, detector-style noisy copy,
    OCR observations and the paints its raster is drawn from.

    Parameters
    ----------

    truth : screenpipes.input.screen
        Annotated elements.

    tree : screenpipes.structure.accessibility_tree
        Ground-truth grouping and navigation order.

    detections : screenpipes.input.screen
        Noisy detections of the same screen.

    ocr : list
        (bbox, text) pairs, one per annotated Text.

    paints : list
        Rectangles the raster is drawn from.

    template : str
        Name of the template used.

    low_contrast : bool
        Whether selection tints were drawn too faint to see.
    """

    def __init__(self, truth, tree, detections, ocr, paints, template,
                 low_contrast=False):

        self.truth = truth
        self.tree = tree
        self.detections = detections
        self.ocr = ocr
        self.paints = paints
        self.template = template
        self.low_contrast = low_contrast

    @property
    def screen_id(self):
        return self.truth.screen_id

    def render(self):
        return render_raster(self.paints, self.truth.width_px,
                             self.truth.height_px)

    def with_raster(self):
        """ Copy whose truth and detection screens carry the rendered
        raster. """

        raster = self.render()
        return synthetic_screen(
            screen(self.truth.screen_id, self.truth.width_px,
                   self.truth.height_px, self.truth.elements, raster=raster),
            self.tree,
            screen(self.detections.screen_id, self.detections.width_px,
                   self.detections.height_px, self.detections.elements,
                   raster=raster),
            self.ocr, self.paints, self.template, self.low_contrast)


def _pick_template(spec, rng):
    names = sorted(spec.template_mix)
    weights = np.array([spec.template_mix[n] for n in names], dtype=float)

    return names[int(rng.choice(len(names), p=weights/weights.sum()))]


def generate_screen(spec, index):
    """ Screen number index of the corpus described by spec. Depends on
    (spec.seed, index) only. """

    rng = utils.screen_rng(spec.seed, index)
    screen_id = "synth-" + str(spec.seed) + "-" + str(index).zfill(5)

    template = _pick_template(spec, rng)
    low_contrast = bool(rng.random() < spec.noise["low_contrast_prob"])

    c = canvas(rng, low_contrast=low_contrast)
    templates[template](c, spec)

    truth = screen(screen_id, spec.width_px, spec.height_px, c.elements)
    tree = accessibility_tree(screen_id, c.nodes)

    detections = screen(screen_id, spec.width_px, spec.height_px,
                        perturb(c.elements, spec, rng))

    ocr = [(e.box, e.text) for e in c.elements
           if e.ui_type == "Text" and e.text]

    return synthetic_screen(truth, tree, detections, ocr, c.paints,
                            template, low_contrast=low_contrast)


def generate_corpus(spec, render=False):
    """ Generate a synthetic corpus.

    Parameters
    ----------

    spec : screenpipes.synthgen.gen_spec
        Corpus settings. Layout ranges that cannot fit on a screen raise
        InfeasibleSpec when the spec is built.

    render : bool - optional
        Attach rendered rasters to the screens. Rasters can also be drawn
        later, one at a time, with synthetic_screen.render.

    Returns
    -------

    corpus : list
        One screenpipes.synthgen.corpus.synthetic_screen per screen.
    """

    spec.check()

    corpus = []
    for i in range(spec.n_screens):
        item = generate_screen(spec, i)
        corpus.append(item.with_raster() if render else item)

    logger.info("Generated {} synthetic screens (seed {}).", len(corpus),
                spec.seed)

    return corpus


def write_corpus(corpus, out_dir, spec=None, rasters=True):
    """ Write a corpus under out_dir: truth.json, detections.json,
    truth_trees.json, ocr.json, manifest.json and, when rasters is
    True, one PNG per screen under rasters/. Screen files refer to the
    PNGs by paths relative to out_dir. """

    if not os.path.exists(out_dir):
        os.makedirs(out_dir)

    refs = {}
    if rasters:
        raster_dir = os.path.join(out_dir, "rasters")
        if not os.path.exists(raster_dir):
            os.makedirs(raster_dir)

        for item in corpus:
            ref = os.path.join("rasters", item.screen_id + ".png")
            save_png(os.path.join(out_dir, ref), item.render())
            refs[item.screen_id] = ref

    save_screens(os.path.join(out_dir, "truth.json"),
                 [item.truth for item in corpus], raster_refs=refs)
    save_screens(os.path.join(out_dir, "detections.json"),
                 [item.detections for item in corpus], raster_refs=refs)
    save_trees(os.path.join(out_dir, "truth_trees.json"),
               [item.tree for item in corpus])
    save_ocr(os.path.join(out_dir, "ocr.json"),
             dict((item.screen_id, item.ocr) for item in corpus))

    manifest = {"n_screens": len(corpus),
                "screens": [{"screen_id": item.screen_id,
                             "template": item.template,
                             "low_contrast": item.low_contrast,
                             "n_elements": len(item.truth.elements),
                             "n_detections": len(item.detections.elements)}
                            for item in corpus],
                "files": ["truth.json", "detections.json",
                          "truth_trees.json", "ocr.json"]}

    if spec is not None:
        manifest["spec"] = spec.to_dict()

    utils.write_json(os.path.join(out_dir, "manifest.json"), manifest)

    logger.info("Wrote {} screens to {}.", len(corpus), out_dir)


def sample_icons(n, seed=0):
    """ Random Icons labelled clickable by the planted rule: an icon is
    clickable near the top or bottom edge, or when its class is one of
    the action classes. Placement follows the templates: some icons sit
    in a navigation bar, some in a tab bar, the rest in the content
    area. Returns (icons, labels). """

    rng = np.random.default_rng(seed)
    icons, labels = [], []

    for i in range(n):
        w = rng.uniform(0.05, 0.1)
        h = rng.uniform(0.025, 0.05)
        left = rng.uniform(0., 1. - w)

        region = rng.random()
        if region < 0.2:
            top = rng.uniform(0.06, 0.1 - h/2.)

        elif region < 0.4:
            top = rng.uniform(0.9, 0.99 - h)

        else:
            top = rng.uniform(content_top, content_floor - h)

        box = bbox(left, top, left + w, top + h)

        icon_class = icon_vocabulary[int(rng.integers(len(icon_vocabulary)))]
        clickable = planted_clickable(box, icon_class)

        icons.append(detected_element("icon-" + str(i), box, "Icon",
                                      icon_class=icon_class,
                                      clickable_annotated=clickable))
        labels.append(clickable)

    return icons, labels
