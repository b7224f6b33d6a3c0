from __future__ import print_function, division, absolute_import

import numpy as np
import pandas as pd

from ..input.ui_types import all_types

from .matching import match_spec, match_detections, align_screens


def all_points_ap(recall, precision):
    """ Area under the precision-recall curve with all-points
    interpolation: precision at each recall level is replaced by the
    best precision at that or any higher recall. """

    recall = np.concatenate([[0.], recall, [1.]])
    precision = np.concatenate([[0.], precision, [0.]])

    precision = np.maximum.accumulate(precision[::-1])[::-1]

    step = np.where(recall[1:] != recall[:-1])[0]

    return float(np.sum((recall[step + 1] - recall[step])
                        * precision[step + 1]))


def pr_curve(confidences, true_positive, n_gt):
    """ Precision and recall after each prediction, ranked by decreasing
    confidence. Equal confidences keep their given order. """

    confidences = np.asarray(confidences, dtype=float)
    true_positive = np.asarray(true_positive, dtype=bool)

    order = np.argsort(-confidences, kind="mergesort")
    tp = np.cumsum(true_positive[order])
    fp = np.cumsum(~true_positive[order])

    recall = tp/float(n_gt) if n_gt else np.zeros(tp.shape[0])
    precision = tp/np.maximum(tp + fp, 1)

    return confidences[order], precision, recall


def scored_predictions(pairs, spec):
    """ Per class, the confidences of all predictions over all screens,
    whether each was a true positive, and the ground truth count. """

    scored = {}

    def entry(ui_type):
        return scored.setdefault(ui_type, {"confidence": [], "tp": [],
                                           "n_gt": 0})

    for preds, gts in pairs:
        result = match_detections(preds.elements, gts.elements, spec)

        for pred, _ in result.matches:
            entry(pred.ui_type)["confidence"].append(pred.confidence)
            entry(pred.ui_type)["tp"].append(True)

        for pred in result.false_positives:
            entry(pred.ui_type)["confidence"].append(pred.confidence)
            entry(pred.ui_type)["tp"].append(False)

        for gt in gts.elements:
            entry(gt.ui_type)["n_gt"] += 1

    return scored


def _type_order(ui_type):
    return (all_types.index(ui_type) if ui_type in all_types
            else len(all_types), ui_type)


def average_precision(pred_screens, gt_screens, spec=None):
    """ Average Precision of every UI type over a set of screens.

    Parameters
    ----------

    pred_screens : list
        Screens of detections with confidences.

    gt_screens : list
        Ground truth screens with the same screen ids.

    spec : screenpipes.evaluation.match_spec - optional
        Matching criterion, IoU above 0.5 by default.

    Returns
    -------

    result : dict
        "per_class" maps each UI type to a dict with "ap" (None when the
        type has no ground truth), "n_gt", "n_pred" and the PR curve
        samples "confidence", "precision" and "recall". "mean_ap" is the
        unweighted mean over types with ground truth, "weighted_mean_ap"
        weights them by ground truth count, and "no_ground_truth" lists
        the types left out of both.
    """

    if spec is None:
        spec = match_spec()

    scored = scored_predictions(align_screens(pred_screens, gt_screens), spec)

    per_class = {}
    for ui_type in sorted(scored, key=_type_order):
        s = scored[ui_type]
        conf, precision, recall = pr_curve(s["confidence"], s["tp"],
                                           s["n_gt"])

        ap = all_points_ap(recall, precision) if s["n_gt"] else None

        per_class[ui_type] = {"ap": ap, "n_gt": s["n_gt"],
                              "n_pred": len(s["confidence"]),
                              "confidence": conf.tolist(),
                              "precision": precision.tolist(),
                              "recall": recall.tolist()}

    defined = [t for t in per_class if per_class[t]["ap"] is not None]

    mean_ap = None
    weighted_mean_ap = None
    if defined:
        aps = np.array([per_class[t]["ap"] for t in defined])
        weights = np.array([per_class[t]["n_gt"] for t in defined], float)

        mean_ap = float(np.mean(aps))
        weighted_mean_ap = float(np.sum(aps*weights)/np.sum(weights))

    return {"criterion": spec.criterion,
            "per_class": per_class,
            "mean_ap": mean_ap,
            "weighted_mean_ap": weighted_mean_ap,
            "no_ground_truth": [t for t in per_class if t not in defined]}


def ap_table(*results):
    """ pandas table of per-class AP, one column per criterion, with
    ground truth and prediction counts. """

    rows = {}
    for result in results:
        for ui_type, entry in result["per_class"].items():
            row = rows.setdefault(ui_type, {"n_gt": entry["n_gt"],
                                            "n_pred": entry["n_pred"]})
            row["ap_" + result["criterion"]] = entry["ap"]

    table = pd.DataFrame.from_dict(rows, orient="index")
    table = table.loc[sorted(table.index, key=_type_order)]
    table.index.name = "ui_type"

    return table
