from __future__ import print_function, division, absolute_import

import warnings

from ..geometry import iou_matrix
from .. import config as default_config


def _confidence_order(elements):
    """ Indices sorted by confidence descending. Ties keep input order. """
    return sorted(range(len(elements)), key=lambda i: -elements[i].confidence)


def filter_by_confidence(elements, config):
    """ Keep elements whose confidence reaches the threshold of their
    class. Classes with no threshold keep everything, with a warning.

    Parameters
    ----------

    elements : list
        detected_element objects.

    config : screenpipes.config.heuristic_config
        Supplies per_class_conf_threshold.
    """

    thresholds = config.per_class_conf_threshold

    missing = sorted(set(e.ui_type for e in elements
                         if e.ui_type not in thresholds))

    for ui_type in missing:
        warnings.warn("No confidence threshold for " + ui_type
                      + ", keeping all of them.")

    return [e for e in elements if e.confidence >= thresholds.get(e.ui_type,
                                                                  0.)]


def greedy_suppression(elements, suppresses):
    """ Generic greedy Non-Max Suppression. Walks elements from most to
    least confident and keeps one unless suppresses(k, i) is true for
    the index k of an element already kept and the candidate index i.
    Survivors keep their input order.
    """

    kept = []
    for i in _confidence_order(elements):
        if not any(suppresses(k, i) for k in kept):
            kept.append(i)

    return [elements[i] for i in sorted(kept)]


def nms_within_class(elements, iou_threshold=default_config.nms_iou):
    """ Standard Non-Max Suppression, run separately per UI type: a
    detection survives only if its IoU with every more confident kept
    detection of the same type is below iou_threshold. """

    if not 0. < iou_threshold <= 1.:
        raise ValueError("iou_threshold must be in (0, 1].")

    elements = list(elements)
    boxes = [e.box for e in elements]
    overlaps = iou_matrix(boxes, boxes)

    def suppresses(k, i):
        return (elements[k].ui_type == elements[i].ui_type
                and overlaps[k, i] >= iou_threshold)

    return greedy_suppression(elements, suppresses)


def dedup_cross_class(elements, config):
    """ Remove duplicates across visually similar UI types (Picture and
    Icon, or Segmented Control, TextField and Container). Within each
    group of config.dedup_groups, a detection is dropped if its IoU with
    a more confident kept detection of any type in the same group is
    above config.dedup_iou. Nested elements overlap far less than this
    and are never touched. """

    group_of = {}
    for n, group in enumerate(config.dedup_groups):
        for ui_type in group:
            group_of[ui_type] = n

    elements = list(elements)
    boxes = [e.box for e in elements]
    overlaps = iou_matrix(boxes, boxes)

    def suppresses(k, i):
        group = group_of.get(elements[i].ui_type)
        return (group is not None
                and group_of.get(elements[k].ui_type) == group
                and overlaps[k, i] > config.dedup_iou)

    return greedy_suppression(elements, suppresses)
