from __future__ import print_function, division, absolute_import

import numpy as np

from collections import namedtuple

from ..geometry import bbox


""" Flat-colour palette. Colours are given in 5-bit quantised units and
drawn at the centre of their bin (8q + 4), so rounding noise in a reader
never moves a pixel into another bin. """


def pixel(q):
    return tuple(8*int(c) + 4 for c in q)


background = pixel((31, 31, 31))
container_fill = pixel((28, 28, 29))
text_ink = pixel((4, 4, 5))
icon_gray = pixel((14, 14, 15))
tab_bar_fill = pixel((29, 29, 30))
segment_fill = pixel((27, 27, 28))
field_fill = pixel((26, 26, 26))
switch_off = pixel((22, 22, 22))
switch_on = pixel((6, 26, 10))

picture_fills = [pixel((10, 18, 26)), pixel((26, 16, 8)),
                 pixel((8, 22, 12)), pixel((20, 10, 20))]

tints = [pixel((0, 15, 31)), pixel((31, 18, 0)), pixel((20, 4, 28)),
         pixel((2, 24, 10))]


def faint(color):
    """ A colour visibly equal to color after quantisation: three units
    up stays inside the same bin. """
    return tuple(min(255, c + 3) for c in color)


class paint(namedtuple("paint", ["box", "color"])):
    """ One filled rectangle, in normalised coordinates, in RGB. """

    __slots__ = ()


def inset(box, fx=0.25, fy=0.25):
    """ The middle of box, leaving fx of the width and fy of the height
    on each side. """

    return bbox(box.left + fx*box.width, box.top + fy*box.height,
                box.right - fx*box.width, box.bottom - fy*box.height)


def bottom_bar(box, fraction=0.12):
    return bbox(box.left, box.bottom - fraction*box.height, box.right,
                box.bottom)


def render_raster(paints, width_px=390, height_px=844, fill=background):
    """ Draw paints in order onto a flat background.

    Parameters
    ----------

    paints : list
        screenpipes.synthgen.render.paint rectangles, back to front.

    width_px, height_px : int - optional
        Raster size.

    fill : tuple - optional
        RGB background.

    Returns
    -------

    raster : numpy.ndarray
        RGBA uint8 array of shape (height_px, width_px, 4).
    """

    raster = np.empty((height_px, width_px, 4), dtype=np.uint8)
    raster[:, :, :3] = fill
    raster[:, :, 3] = 255

    for p in paints:
        x0 = max(0, int(round(p.box.left*width_px)))
        x1 = min(width_px, int(round(p.box.right*width_px)))
        y0 = max(0, int(round(p.box.top*height_px)))
        y1 = min(height_px, int(round(p.box.bottom*height_px)))

        if x1 > x0 and y1 > y0:
            raster[y0:y1, x0:x1, :3] = p.color

    return raster
