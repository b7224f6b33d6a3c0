from __future__ import print_function, division, absolute_import

import json
import warnings
import numpy as np

from loguru import logger

from ..exceptions import UnachievablePrecisionWarning
from ..input.ui_types import interactive_types, unknown_icon
from ..config import training_config
from .. import config
from .. import utils

from .boosted_trees import boosted_trees


def icon_features(icons, vocabulary):
    """ Feature matrix for a list of Icon elements: normalised centre x,
    centre y, width and height, followed by a one-hot encoding of the
    icon class over vocabulary. Classes outside the vocabulary encode as
    all zeros. """

    index = dict((name, i) for i, name in enumerate(vocabulary))
    X = np.zeros((len(icons), 4 + len(vocabulary)))

    for row, icon in enumerate(icons):
        cx, cy = icon.box.center
        X[row, :4] = [cx, cy, icon.box.width, icon.box.height]

        column = index.get(icon.icon_class)
        if column is not None:
            X[row, 4 + column] = 1.

    return X


def calibrate_threshold(scores, labels, target_precision,
                        min_recall=config.clickability_min_recall):
    """ Pick the decision threshold from a validation precision-recall
    curve.

    Every observed score is a candidate threshold (predict positive when
    score >= threshold). The smallest one whose precision reaches
    target_precision and whose recall reaches min_recall (0 by default,
    so no floor) is returned.
    If there is none, the threshold with the highest precision is
    returned instead and achieved is False.

    Returns
    -------

    threshold, precision, recall : float
        The chosen threshold and its validation precision and recall.

    achieved : bool
        Whether the precision target was met.
    """

    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels, dtype=bool)

    n_pos = labels.sum()
    if scores.shape[0] == 0 or n_pos == 0:
        return 1., 0., 0., False

    order = np.argsort(-scores, kind="mergesort")
    s = scores[order]
    tp = np.cumsum(labels[order])

    # Only the last position of each run of equal scores is a threshold.
    last = np.append(s[1:] != s[:-1], True)
    idx = np.where(last)[0]

    precision = tp[idx]/(idx + 1.)
    recall = tp[idx]/float(n_pos)

    valid = (precision >= target_precision) & (recall >= min_recall)

    if np.any(valid):
        k = np.where(valid)[0][-1]
        return float(s[idx[k]]), float(precision[k]), float(recall[k]), True

    best = precision.max()
    k = np.where(precision == best)[0][-1]

    return float(s[idx[k]]), float(precision[k]), float(recall[k]), False


class clickability_model(object):
    """ Predicts whether an Icon is clickable from its position, size
    and icon class. Icons are only marked clickable when the model is
    very confident, via a threshold calibrated for high precision.

    Parameters
    ----------

    ensemble : screenpipes.semantics.boosted_trees.boosted_trees
        The fitted trees.

    vocabulary : list
        Icon class names of the one-hot features, in column order.

    threshold : float
        Decision threshold on the predicted probability.

    validation : dict - optional
        Precision, recall and counts measured when calibrating.
    """

    def __init__(self, ensemble, vocabulary, threshold, validation=None):
        self.ensemble = ensemble
        self.vocabulary = list(vocabulary)
        self.threshold = float(threshold)
        self.validation = validation or {}

        if not 0. <= self.threshold <= 1.:
            raise ValueError("threshold must be in [0, 1]")

    def predict_proba(self, icons):
        if len(icons) == 0:
            return np.zeros(0)

        return self.ensemble.predict_proba(icon_features(icons,
                                                         self.vocabulary))

    def predict(self, icons):
        return self.predict_proba(icons) >= self.threshold

    def to_dict(self):
        return {"threshold": self.threshold,
                "vocabulary": self.vocabulary,
                "validation": self.validation,
                "ensemble": self.ensemble.to_dict()}

    @classmethod
    def from_dict(cls, d):
        return cls(boosted_trees.from_dict(d["ensemble"]), d["vocabulary"],
                   d["threshold"], validation=d.get("validation"))

    def save(self, path):
        utils.write_json(path, self.to_dict())

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.from_dict(json.load(f))


def train_clickability(icons, labels,
                       target_precision=config.clickability_target_precision,
                       settings=None,
                       min_recall=config.clickability_min_recall):
    """ Train a clickability model on labelled Icons.

    The labelled set is split at random into training and validation
    parts. Boosted trees with logistic loss are fitted on the training
    part, and the decision threshold is the smallest one reaching
    target_precision on the validation part. When the target cannot be
    reached, the most precise threshold is used and an
    UnachievablePrecisionWarning is raised.

    Parameters
    ----------

    icons : list
        Icon detected_element objects.

    labels : array-like
        True where the icon is clickable.

    target_precision : float - optional
        Validation precision the threshold has to keep.

    settings : screenpipes.config.training_config - optional
        Tree count, depth, learning rate, split and seed.

    min_recall : float - optional
        Validation recall a threshold needs to count. 0 (the default)
        accepts any threshold reaching target_precision.
    """

    if settings is None:
        settings = training_config()

    labels = np.asarray(labels, dtype=bool)

    if len(icons) != labels.shape[0]:
        raise ValueError("icons and labels have different lengths")

    if labels.all() or not labels.any():
        raise ValueError("training set needs clickable and non-clickable "
                         + "icons")

    vocabulary = sorted(set(i.icon_class for i in icons
                            if i.icon_class and i.icon_class != unknown_icon))

    X = icon_features(icons, vocabulary)

    rng = np.random.default_rng(settings.seed)
    order = rng.permutation(labels.shape[0])
    n_val = max(1, int(round(settings.validation_fraction*labels.shape[0])))

    val, train = order[:n_val], order[n_val:]

    if labels[train].all() or not labels[train].any():
        raise ValueError("training split lost one of the classes, use more "
                         + "data or a smaller validation_fraction")

    ensemble = boosted_trees.fit(X[train], labels[train],
                                 n_trees=settings.n_trees,
                                 max_depth=settings.max_depth,
                                 learning_rate=settings.learning_rate,
                                 min_samples_leaf=settings.min_samples_leaf)

    scores = ensemble.predict_proba(X[val])

    threshold, precision, recall, achieved = calibrate_threshold(
        scores, labels[val], target_precision, min_recall=min_recall)

    if not achieved:
        warnings.warn("Validation precision " + "%.3f" % precision
                      + " is below the target " + str(target_precision)
                      + ", using the most precise threshold.",
                      UnachievablePrecisionWarning)

    logger.info("Clickability threshold {:.3f}: precision {:.3f}, recall "
                "{:.3f} on {} validation icons.", threshold, precision,
                recall, n_val)

    validation = {"precision": precision, "recall": recall,
                  "target_precision": target_precision,
                  "achieved": achieved, "n_train": int(train.shape[0]),
                  "n_validation": int(n_val)}

    return clickability_model(ensemble, vocabulary, threshold,
                              validation=validation)


def score_clickability(model, element):
    """ Clickable flag for one element.

    Icons are scored by model (left as they are when model is None).
    Types that are interactive by construction are clickable. Text and
    Picture, and the remaining types, are left unset: users tell from
    the alternative text whether they can be activated.
    """

    if element.ui_type == "Icon":
        if model is None:
            return element.clickable

        return bool(model.predict([element])[0])

    if element.ui_type in interactive_types:
        return True

    return None
