from __future__ import print_function, division, absolute_import

import numpy as np

from collections import namedtuple


class bbox(namedtuple("bbox", ["left", "top", "right", "bottom"])):
    """ Axis-aligned box in normalised screen coordinates, origin at
    the top-left of the screen, all values in [0, 1]. Boxes are
    immutable values and can be used as dictionary keys.

    Parameters
    ----------

    left, top, right, bottom : float
        Box edges. Degenerate boxes (left >= right or top >= bottom)
        and non-finite values raise a ValueError.
    """

    __slots__ = ()

    def __new__(cls, left, top, right, bottom):
        values = [float(left), float(top), float(right), float(bottom)]

        if not np.all(np.isfinite(values)):
            raise ValueError("non-finite box coordinates " + str(values))

        if not (values[0] < values[2] and values[1] < values[3]):
            raise ValueError("degenerate box " + str(values))

        return super(bbox, cls).__new__(cls, *values)

    @property
    def width(self):
        return self.right - self.left

    @property
    def height(self):
        return self.bottom - self.top

    @property
    def area(self):
        return (self.right - self.left)*(self.bottom - self.top)

    @property
    def center(self):
        return ((self.left + self.right)/2., (self.top + self.bottom)/2.)

    def to_dict(self):
        return {"l": self.left, "t": self.top,
                "r": self.right, "b": self.bottom}


def _ratio(numerator, denominator):
    """ Division clamped into [0, 1] against rounding error. """
    if denominator <= 0.:
        return 0.
    return min(1., max(0., numerator/denominator))


def x_overlap(a, b):
    """ Length of the intersection of the horizontal projections. """
    return max(0., min(a.right, b.right) - max(a.left, b.left))


def y_overlap(a, b):
    """ Length of the intersection of the vertical projections. """
    return max(0., min(a.bottom, b.bottom) - max(a.top, b.top))


def intersection_area(a, b):
    return x_overlap(a, b)*y_overlap(a, b)


def iou(a, b):
    """ Intersection over union of two boxes, 0 when disjoint. """
    inter = intersection_area(a, b)
    if inter == 0.:
        return 0.

    return _ratio(inter, a.area + b.area - inter)


def containment_fraction(inner, outer):
    """ Fraction of inner's area lying inside outer. Not symmetric. """
    return _ratio(intersection_area(inner, outer), inner.area)


def x_overlap_fraction(a, b):
    """ Fraction of a's width covered by b's horizontal extent. The
    first argument is the denominator: for picture subtitles this is
    the (usually narrower) subtitle text. """
    return _ratio(x_overlap(a, b), a.width)


def center_in(det, target):
    """ Whether det's midpoint lies inside target, edges included. """
    cx, cy = det.center
    return (target.left <= cx <= target.right
            and target.top <= cy <= target.bottom)


def union_box(boxes):
    """ Smallest box enclosing every box in boxes. """
    boxes = list(boxes)
    if not boxes:
        raise ValueError("union_box needs at least one box")

    return bbox(min(b.left for b in boxes), min(b.top for b in boxes),
                max(b.right for b in boxes), max(b.bottom for b in boxes))


def clamp_coordinates(left, top, right, bottom):
    """ Clamp raw coordinates into [0, 1]. Returns the clamped values
    and whether anything changed. Degenerate results are left to the
    bbox constructor to reject. """

    raw = [left, top, right, bottom]
    clamped = [min(1., max(0., float(v))) for v in raw]

    return clamped, clamped != [float(v) for v in raw]


def boxes_to_array(boxes):
    """ (n, 4) array of left, top, right, bottom. """
    if len(boxes) == 0:
        return np.zeros((0, 4))

    return np.array([[b.left, b.top, b.right, b.bottom] for b in boxes])


def iou_matrix(boxes_a, boxes_b):
    """ Pairwise IoU between two lists of boxes as an (n, m) array,
    computed in one pass with numpy broadcasting. """

    a = boxes_to_array(boxes_a)
    b = boxes_to_array(boxes_b)

    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[0]))

    area_a = (a[:, 2] - a[:, 0])*(a[:, 3] - a[:, 1])
    area_b = (b[:, 2] - b[:, 0])*(b[:, 3] - b[:, 1])

    top_left = np.maximum(a[:, None, :2], b[None, :, :2])
    bottom_right = np.minimum(a[:, None, 2:], b[None, :, 2:])

    inter = np.prod(np.clip(bottom_right - top_left, 0., None), axis=2)
    union = area_a[:, None] + area_b[None, :] - inter

    return np.clip(inter/union, 0., 1.)
