from __future__ import print_function, division, absolute_import

import pandas as pd

from ..input.ui_types import all_types
from .. import config

from .matching import match_spec, greedy_match, align_screens


no_gt = "no GT"
duplicate = "duplicate"
missed = "missed"


def confusion_matrix(pred_screens, gt_screens, iou_threshold=config.match_iou):
    """ Confusion matrix between ground truth and predicted UI types.

    Predictions are matched to ground truth elements by IoU alone,
    ignoring class. Rows are ground truth types and columns predicted
    types, so each match adds one to (ground truth type, predicted
    type). Predictions that overlap nothing are counted in the "no GT"
    row, predictions that only overlap an element already taken in the
    "duplicate" row, and unmatched ground truth in the "missed" column.

    Returns a pandas DataFrame of integer counts.
    """

    spec = match_spec("iou_over_half", iou_threshold)
    counts = {}

    def add(row, column):
        counts[(row, column)] = counts.get((row, column), 0) + 1

    pairs = align_screens(pred_screens, gt_screens)

    present = set()
    for preds, gts in pairs:
        result = greedy_match(preds.elements, gts.elements, spec,
                              same_class=False)

        for pred, gt in result.matches:
            add(gt.ui_type, pred.ui_type)

        duplicates = set(id(p) for p in result.duplicates)
        for pred in result.false_positives:
            add(duplicate if id(pred) in duplicates else no_gt, pred.ui_type)

        for gt in result.missed:
            add(gt.ui_type, missed)

        present.update(e.ui_type for e in preds.elements)
        present.update(e.ui_type for e in gts.elements)

    types = sorted(present, key=lambda t: (all_types.index(t)
                                           if t in all_types
                                           else len(all_types), t))

    matrix = pd.DataFrame(0, index=types + [no_gt, duplicate],
                          columns=types + [missed], dtype=int)

    for (row, column), n in counts.items():
        matrix.loc[row, column] = n

    matrix.index.name = "ground_truth"
    matrix.columns.name = "predicted"

    return matrix
