from __future__ import print_function, division, absolute_import

import numpy as np

from collections import Counter
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..geometry import bbox, y_overlap
from ..exceptions import MissingRaster, EmptyCrop
from .. import config

from .tint import extract_tint, find_outlier, crop_pixels, ranked_colors


def _unique_flags(n, index):
    """ Selected flag for index, unselected for the rest, or all None. """

    if index is None:
        return [None]*n

    return [i == index for i in range(n)]


def tint_outlier(boxes, raster, bits=config.tint_quantization_bits):
    """ Index of the box whose tint colour is the outlier, or None. """
    tints = [extract_tint(raster, box, bits=bits).tint_color for box in boxes]
    return find_outlier(tints)


def select_tab_state(tab_boxes, raster, bits=config.tint_quantization_bits):
    """ Find the selected tab of a tab bar from its tint colour: the
    selected tab is highlighted while the others are not, so its tint is
    the outlier among the tabs.

    Parameters
    ----------

    tab_boxes : list
        bbox of each Tab Button.

    raster : numpy.ndarray
        RGBA screenshot, or None.

    Returns
    -------

    flags : list
        True for the selected tab and False for the rest, or None for
        every tab when no single tab stands out or there is no raster.
    """

    n = len(tab_boxes)
    if raster is None or n < 2:
        return [None]*n

    try:
        return _unique_flags(n, tint_outlier(tab_boxes, raster, bits=bits))

    except EmptyCrop:
        return [None]*n


def bottom_strip(box, fraction=config.sc_bottom_strip_fraction):
    """ The bottom fraction of box, where an underline bar would be. """
    return bbox(box.left, box.bottom - fraction*box.height,
                box.right, box.bottom)


def strip_outlier(boxes, raster, bits=config.tint_quantization_bits,
                  fraction=config.sc_bottom_strip_fraction):
    """ Index of the only segment whose bottom strip is not the usual
    segment background colour, or None. The usual colour is the most
    common dominant colour of the whole segments, so two-segment rows
    work too. """

    backgrounds = [extract_tint(raster, box, bits=bits).background_color
                   for box in boxes]

    counts = Counter(backgrounds)
    row_background = sorted(counts, key=lambda c: (-counts[c], c))[0]

    candidates = []
    for i, box in enumerate(boxes):
        colors, _ = ranked_colors(crop_pixels(raster, bottom_strip(box,
                                                                   fraction)),
                                  bits=bits)
        if colors[0] != row_background:
            candidates.append(i)

    if len(candidates) == 1:
        return candidates[0]

    return None


def text_outlier(elements):
    """ Index of the only segment carrying text, or None. """

    with_text = [i for i, e in enumerate(elements) if e.text]

    if len(with_text) == 1:
        return with_text[0]

    return None


def select_segmented_state(sc_elements, raster,
                           bits=config.tint_quantization_bits,
                           fraction=config.sc_bottom_strip_fraction):
    """ Find the selected segment of one Segmented Control row.

    Three rules are tried in turn and the first with a single answer
    wins: the segment with the outlier tint colour, the segment with a
    bar along its bottom edge, and the only segment with text. Without
    a raster only the text rule is tried.

    Parameters
    ----------

    sc_elements : list
        detected_element objects of one row, at least two.

    raster : numpy.ndarray
        RGBA screenshot, or None.

    Returns
    -------

    flags : list
        One flag per element: True, False, or None for all when no rule
        decides.
    """

    n = len(sc_elements)
    if n < 2:
        return [None]*n

    boxes = [e.box for e in sc_elements]

    if raster is not None:
        try:
            index = tint_outlier(boxes, raster, bits=bits)
            if index is None:
                index = strip_outlier(boxes, raster, bits=bits,
                                      fraction=fraction)

            if index is not None:
                return _unique_flags(n, index)

        except EmptyCrop:
            pass

    return _unique_flags(n, text_outlier(sc_elements))


def sc_rows(elements, config):
    """ Split Segmented Controls into rows. Two segments share a row
    when their vertical overlap is at least sc_row_y_overlap_min of the
    shorter one; rows are the connected components of that relation,
    each sorted left to right. Rows come out top to bottom. """

    controls = [e for e in elements if e.ui_type == "SegmentedControl"]
    n = len(controls)

    if n == 0:
        return []

    adjacency = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            shorter = min(controls[i].box.height, controls[j].box.height)
            if (y_overlap(controls[i].box, controls[j].box)
                    >= config.sc_row_y_overlap_min*shorter):
                adjacency[i, j] = adjacency[j, i] = True

    n_rows, labels = connected_components(csr_matrix(adjacency),
                                          directed=False)

    rows = [sorted([controls[i] for i in range(n) if labels[i] == r],
                   key=lambda e: (e.box.left, e.box.top))
            for r in range(n_rows)]

    return sorted(rows, key=lambda row: (min(e.box.top for e in row),
                                         row[0].box.left))


def screen_raster(screen):
    """ The screen's raster, or None when it has none. """
    try:
        return screen.raster

    except MissingRaster:
        return None
