from __future__ import print_function, division, absolute_import

from collections import namedtuple

from ..geometry import iou, center_in
from ..exceptions import IdMismatch
from .. import config


criteria = ["iou_over_half", "center_hit"]


class match_spec(namedtuple("match_spec", ["criterion", "iou_threshold"])):
    """ How a detection is matched to a ground truth element: by IoU
    strictly above iou_threshold ("iou_over_half"), or by the centre of
    the detection lying inside the element ("center_hit"). Either way
    predictions are taken in order of decreasing confidence. """

    __slots__ = ()

    def __new__(cls, criterion="iou_over_half", iou_threshold=config.match_iou):
        if criterion not in criteria:
            raise ValueError("unknown matching criterion " + str(criterion))

        return super(match_spec, cls).__new__(cls, criterion,
                                              float(iou_threshold))

    def hits(self, pred_box, gt_box):
        if self.criterion == "center_hit":
            return center_in(pred_box, gt_box)

        return iou(pred_box, gt_box) > self.iou_threshold


class match_result(object):
    """ Outcome of matching one screen.

    Attributes
    ----------

    matches : list
        (prediction, ground truth) pairs.

    false_positives : list
        Predictions left without a ground truth element.

    duplicates : list
        The false positives that would have hit a ground truth element
        already taken by a more confident prediction.

    missed : list
        Ground truth elements no prediction took.
    """

    def __init__(self, matches, false_positives, duplicates, missed):
        self.matches = matches
        self.false_positives = false_positives
        self.duplicates = duplicates
        self.missed = missed


def confidence_order(preds):
    return sorted(range(len(preds)), key=lambda i: -preds[i].confidence)


def greedy_match(preds, gts, spec, same_class=True):
    """ Greedy matching of predictions to ground truth for one screen.

    Predictions are visited from most to least confident. Each takes the
    unmatched ground truth element with the highest IoU among those it
    hits under spec (and of its own class when same_class is set).
    """

    taken = [False]*len(gts)
    matches, false_positives, duplicates = [], [], []

    for i in confidence_order(preds):
        pred = preds[i]

        hits = [j for j, gt in enumerate(gts)
                if (not same_class or gt.ui_type == pred.ui_type)
                and spec.hits(pred.box, gt.box)]

        free = [j for j in hits if not taken[j]]

        if free:
            j = max(free, key=lambda j: (iou(pred.box, gts[j].box), -j))
            taken[j] = True
            matches.append((pred, gts[j]))

        else:
            false_positives.append(pred)
            if hits:
                duplicates.append(pred)

    missed = [gt for j, gt in enumerate(gts) if not taken[j]]

    return match_result(matches, false_positives, duplicates, missed)


def match_detections(preds, gts, spec=None):
    """ Match the predictions of one screen to its ground truth, class
    by class. Returns a match_result. """

    if spec is None:
        spec = match_spec()

    return greedy_match(preds, gts, spec, same_class=True)


def align_screens(preds, truths):
    """ Pair screens from two lists by screen_id, in the order of truths.
    Raises IdMismatch when the two lists cover different screens. """

    by_id = dict((s.screen_id, s) for s in preds)
    truth_ids = [s.screen_id for s in truths]

    if set(by_id) != set(truth_ids) or len(by_id) != len(preds):
        missing = sorted(set(truth_ids) - set(by_id))
        extra = sorted(set(by_id) - set(truth_ids))
        raise IdMismatch("Screen ids differ: missing " + str(missing)
                         + ", unexpected " + str(extra))

    return [(by_id[s.screen_id], s) for s in truths]
