from __future__ import print_function, division, absolute_import

import numpy as np

from collections import namedtuple

from ..exceptions import EmptyCrop, MissingRaster
from .. import config


class tint_profile(namedtuple("tint_profile", ["background_color",
                                               "tint_color", "tint_weight"])):
    """ The two most frequent quantised colours of a crop. Colours are
    (r, g, b) tuples in quantised units, tint_weight is the fraction of
    crop pixels in the tint colour. A monochrome crop has tint equal to
    background and weight 0. """

    __slots__ = ()


def crop_pixels(raster, box):
    """ RGB pixels of raster inside box, as an (n, 3) array. Box edges
    are rounded to the nearest pixel. """

    height, width = raster.shape[:2]

    x0 = int(round(box.left*width))
    x1 = int(round(box.right*width))
    y0 = int(round(box.top*height))
    y1 = int(round(box.bottom*height))

    x0, x1 = max(0, x0), min(width, x1)
    y0, y1 = max(0, y0), min(height, y1)

    if x1 <= x0 or y1 <= y0:
        raise EmptyCrop("Box " + str(tuple(box)) + " covers no pixels on a "
                        + str(width) + "x" + str(height) + " raster.")

    return raster[y0:y1, x0:x1, :3].reshape(-1, 3)


def ranked_colors(pixels, bits=config.tint_quantization_bits):
    """ Quantised colours of pixels with their counts, most frequent
    first. Equal counts are ordered by colour so results never depend on
    pixel order. """

    quantised = pixels.astype(np.int64) >> (8 - bits)
    keys = (quantised[:, 0] << (2*bits)) | (quantised[:, 1] << bits) \
        | quantised[:, 2]

    values, counts = np.unique(keys, return_counts=True)
    order = np.lexsort((values, -counts))

    mask = (1 << bits) - 1
    colors = [(int(k >> (2*bits)), int((k >> bits) & mask), int(k & mask))
              for k in values[order]]

    return colors, counts[order]


def extract_tint(raster, box, bits=config.tint_quantization_bits):
    """ Background and tint colour of the part of raster inside box.

    Parameters
    ----------

    raster : numpy.ndarray
        RGBA screenshot, shape (height, width, 4).

    box : screenpipes.geometry.bbox
        Region to look at.

    bits : int - optional
        Bits kept per channel before counting colours.
    """

    if raster is None:
        raise MissingRaster("extract_tint needs a raster.")

    colors, counts = ranked_colors(crop_pixels(raster, box), bits=bits)

    if len(colors) == 1:
        return tint_profile(colors[0], colors[0], 0.)

    return tint_profile(colors[0], colors[1],
                        float(counts[1])/float(counts.sum()))


def color_distance(a, b):
    """ Euclidean distance between two quantised colours. """
    return float(np.sqrt(np.sum((np.array(a, dtype=float)
                                 - np.array(b, dtype=float))**2)))


def find_outlier(colors):
    """ Index of the colour that stands out from the others, or None.

    Each colour's summed distance to all the others is computed; the
    largest total has to beat every other total by more than one
    quantisation step. With fewer than three colours there is no
    majority to stand out from and None is returned.
    """

    if len(colors) < 3:
        return None

    totals = np.array([sum(color_distance(c, other) for other in colors)
                       for c in colors])

    order = np.argsort(-totals, kind="mergesort")

    if totals[order[0]] - totals[order[1]] > 1.:
        return int(order[0])

    return None
