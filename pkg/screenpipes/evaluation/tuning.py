from __future__ import print_function, division, absolute_import

import warnings
import numpy as np

from .average_precision import scored_predictions
from .matching import match_spec, align_screens


def f_beta(tp, fp, fn, beta):
    """ F-beta score from counts. beta > 1 weighs recall more. """

    b2 = beta**2
    denominator = (1. + b2)*tp + b2*fn + fp

    if denominator == 0:
        return 0.

    return (1. + b2)*tp/denominator


def best_threshold(confidences, true_positive, n_gt, beta=1.):
    """ Confidence threshold with the highest F-beta score.

    Every observed confidence is tried as a threshold (keep predictions
    with confidence >= threshold). On ties the lowest threshold wins.
    Returns (threshold, score).
    """

    confidences = np.asarray(confidences, dtype=float)
    true_positive = np.asarray(true_positive, dtype=bool)

    best = None
    for threshold in np.unique(confidences):
        kept = confidences >= threshold
        tp = int(np.sum(true_positive & kept))
        fp = int(np.sum(~true_positive & kept))

        score = f_beta(tp, fp, n_gt - tp, beta)

        if best is None or score > best[1]:
            best = (float(threshold), score)

    return best


def tune_thresholds(pred_screens, gt_screens, beta=1., spec=None):
    """ Per UI type confidence threshold maximising F-beta on a tuning
    set.

    Parameters
    ----------

    pred_screens, gt_screens : list
        Detections and ground truth, with matching screen ids.

    beta : float - optional
        Above 1 favours recall (screen readers), below 1 favours
        precision (e.g. Switch Control users).

    Returns
    -------

    thresholds : dict
        Threshold per UI type. A type with no predictions gets 0 and a
        type with predictions but no ground truth gets 1, each with a
        warning.

    scores : dict
        F-beta reached per UI type.
    """

    if beta <= 0:
        raise ValueError("beta must be positive")

    if spec is None:
        spec = match_spec()

    scored = scored_predictions(align_screens(pred_screens, gt_screens), spec)

    thresholds, scores = {}, {}
    for ui_type in sorted(scored):
        s = scored[ui_type]

        if not s["confidence"]:
            warnings.warn("No predictions of " + ui_type
                          + ", threshold set to 0.")
            thresholds[ui_type], scores[ui_type] = 0., 0.

        elif s["n_gt"] == 0:
            warnings.warn("No ground truth for " + ui_type
                          + ", threshold set to 1.")
            thresholds[ui_type], scores[ui_type] = 1., 0.

        else:
            thresholds[ui_type], scores[ui_type] = best_threshold(
                s["confidence"], s["tp"], s["n_gt"], beta=beta)

    return thresholds, scores
