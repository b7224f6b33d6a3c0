from __future__ import print_function, division, absolute_import

import numpy as np

from scipy.special import expit


class regression_tree(object):
    """ A depth-limited regression tree stored as flat arrays. Node 0
    is the root; a node with feature -1 is a leaf.

    Parameters
    ----------

    feature, threshold, left, right, value : array-like
        Per-node split feature, split threshold (go left when the
        feature value is <= threshold), child indices and leaf value.
    """

    def __init__(self, feature, threshold, left, right, value):
        self.feature = np.asarray(feature, dtype=int)
        self.threshold = np.asarray(threshold, dtype=float)
        self.left = np.asarray(left, dtype=int)
        self.right = np.asarray(right, dtype=int)
        self.value = np.asarray(value, dtype=float)

        if not np.all(np.isfinite(self.value)):
            raise ValueError("regression tree has non-finite leaf values")

    @property
    def n_nodes(self):
        return self.feature.shape[0]

    def predict(self, X):
        X = np.atleast_2d(X)
        node = np.zeros(X.shape[0], dtype=int)

        # Each step moves every unfinished row one level down.
        for _ in range(self.n_nodes):
            internal = self.feature[node] >= 0
            if not np.any(internal):
                break

            rows = np.where(internal)[0]
            go_left = (X[rows, self.feature[node[rows]]]
                       <= self.threshold[node[rows]])

            node[rows] = np.where(go_left, self.left[node[rows]],
                                  self.right[node[rows]])

        return self.value[node]

    def to_dict(self):
        return {"feature": self.feature.tolist(),
                "threshold": self.threshold.tolist(),
                "left": self.left.tolist(),
                "right": self.right.tolist(),
                "value": self.value.tolist()}

    @classmethod
    def from_dict(cls, d):
        return cls(d["feature"], d["threshold"], d["left"], d["right"],
                   d["value"])


def _best_split(X, residual, min_samples_leaf):
    """ Feature and threshold giving the largest drop in squared error
    of residual, or None when no split is allowed. """

    n, n_features = X.shape
    best = None
    best_gain = 1e-12

    total = residual.sum()
    base = total**2/n

    for f in range(n_features):
        order = np.argsort(X[:, f], kind="mergesort")
        x = X[order, f]
        r = residual[order]

        left_sum = np.cumsum(r)[:-1]
        n_left = np.arange(1, n)
        n_right = n - n_left

        allowed = ((x[1:] > x[:-1]) & (n_left >= min_samples_leaf)
                   & (n_right >= min_samples_leaf))

        if not np.any(allowed):
            continue

        gain = (left_sum**2/n_left + (total - left_sum)**2/n_right) - base
        gain[~allowed] = -np.inf

        i = int(np.argmax(gain))
        if gain[i] > best_gain:
            best_gain = gain[i]
            best = (f, (x[i] + x[i + 1])/2.)

    return best


def fit_regression_tree(X, residual, hessian, max_depth, min_samples_leaf):
    """ Grow a regression tree on residual by least squares, then set
    each leaf to the Newton step sum(residual)/sum(hessian) of its
    rows. """

    feature, threshold, left, right, value = [], [], [], [], []

    def grow(rows, depth):
        node = len(feature)
        feature.append(-1)
        threshold.append(0.)
        left.append(-1)
        right.append(-1)
        value.append(0.)

        split = None
        if depth < max_depth and rows.shape[0] >= 2*min_samples_leaf:
            split = _best_split(X[rows], residual[rows], min_samples_leaf)

        if split is None:
            h = hessian[rows].sum()
            value[node] = residual[rows].sum()/max(h, 1e-12)
            return node

        f, t = split
        go_left = X[rows, f] <= t

        feature[node] = f
        threshold[node] = t
        left[node] = grow(rows[go_left], depth + 1)
        right[node] = grow(rows[~go_left], depth + 1)

        return node

    grow(np.arange(X.shape[0]), 0)

    return regression_tree(feature, threshold, left, right, value)


class boosted_trees(object):
    """ Gradient boosted regression trees for binary classification
    with logistic loss.

    Parameters
    ----------

    trees : list
        regression_tree objects, applied in order.

    learning_rate : float
        Shrinkage applied to every tree.

    base_score : float
        Initial log-odds before any tree.
    """

    def __init__(self, trees, learning_rate, base_score):
        self.trees = list(trees)
        self.learning_rate = float(learning_rate)
        self.base_score = float(base_score)

    def decision_function(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        score = np.full(X.shape[0], self.base_score)

        for tree in self.trees:
            score += self.learning_rate*tree.predict(X)

        return score

    def predict_proba(self, X):
        """ Probability of the positive class for each row of X. """
        return expit(self.decision_function(X))

    @classmethod
    def fit(cls, X, y, n_trees=50, max_depth=3, learning_rate=0.1,
            min_samples_leaf=5):
        """ Fit to feature matrix X and 0/1 labels y. """

        X = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=float)

        rate = np.clip(y.mean(), 1e-6, 1. - 1e-6)
        base_score = np.log(rate/(1. - rate))

        score = np.full(y.shape[0], base_score)
        trees = []

        for _ in range(n_trees):
            p = expit(score)
            tree = fit_regression_tree(X, y - p, p*(1. - p), max_depth,
                                       min_samples_leaf)

            score += learning_rate*tree.predict(X)
            trees.append(tree)

        return cls(trees, learning_rate, base_score)

    def to_dict(self):
        return {"learning_rate": self.learning_rate,
                "base_score": self.base_score,
                "trees": [t.to_dict() for t in self.trees]}

    @classmethod
    def from_dict(cls, d):
        return cls([regression_tree.from_dict(t) for t in d["trees"]],
                   d["learning_rate"], d["base_score"])
