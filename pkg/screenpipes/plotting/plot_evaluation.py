from __future__ import print_function, division, absolute_import

import numpy as np

try:
    import matplotlib as mpl
    import matplotlib.pyplot as plt

except RuntimeError:
    pass

from .general import *


def plot_pr_curves(report, criterion="iou_over_half", thresholds=None,
                   show=False, save=False):
    """ Precision-recall curve of every class with ground truth.

    Parameters
    ----------

    report : dict
        Output of screenpipes.evaluation.evaluate.

    criterion : str - optional
        Matching criterion to plot.

    thresholds : dict - optional
        Confidence threshold per class, marked on its curve.
    """

    update_rcParams()

    fig = plt.figure(figsize=(8, 6))
    ax = plt.subplot()

    per_class = report["ap"][criterion]["per_class"]

    for ui_type in sorted(per_class):
        entry = per_class[ui_type]
        if entry["ap"] is None or not len(entry["recall"]):
            continue

        recall = np.asarray(entry["recall"])
        precision = np.asarray(entry["precision"])
        color = type_colors[ui_type]

        ax.plot(recall, precision, color=color, lw=1.5,
                label=ui_type + " (%.2f)" % entry["ap"])

        if thresholds is not None and ui_type in thresholds:
            confidence = np.asarray(entry["confidence"])
            kept = np.where(confidence >= thresholds[ui_type])[0]
            if kept.shape[0]:
                i = kept[-1]
                ax.scatter(recall[i], precision[i], color=color, s=40,
                           edgecolor="black", zorder=5)

    ax.set_xlim(0., 1.)
    ax.set_ylim(0., 1.05)
    ax.set_xlabel("Recall")
    ax.set_ylabel("Precision")
    ax.legend(frameon=False, fontsize=8, loc="lower left")

    finish(fig, save=save, show=show)

    return fig, ax


def plot_gap_histogram(gap, show=False, save=False):
    """ Screens per share of matched annotations, with separate bars for
    no match and full match. """

    update_rcParams()

    fig = plt.figure(figsize=(10, 4))
    ax = plt.subplot()

    histogram = gap["histogram"]
    x = np.arange(len(histogram))

    colors = ["firebrick"] + ["gray"]*(len(histogram) - 2) + ["seagreen"]
    ax.bar(x, histogram.values, color=colors, edgecolor="black", lw=1.)

    ax.set_xticks(x)
    ax.set_xticklabels(histogram.index, rotation=45, ha="right")
    ax.set_xlabel("Matched annotations")
    ax.set_ylabel("Screens")

    finish(fig, save=save, show=show)

    return fig, ax


def plot_unmatched_types(gap, show=False, save=False):
    """ Unmatched annotations per UI type. """

    update_rcParams()

    fig = plt.figure(figsize=(6, 4))
    ax = plt.subplot()

    counts = gap["unmatched_by_type"]
    y = np.arange(len(counts))

    ax.barh(y, counts.values, color=[type_colors[t] for t in counts.index],
            edgecolor="black", lw=1.)

    ax.set_yticks(y)
    ax.set_yticklabels(counts.index)
    ax.invert_yaxis()
    ax.set_xlabel("Unmatched annotations")

    finish(fig, save=save, show=show)

    return fig, ax
