from __future__ import print_function, division, absolute_import

import numpy as np
import pandas as pd

from ..geometry import containment_fraction, iou, y_overlap

from .matching import align_screens


matched = "matched"
contained_ambiguous = "contained-ambiguous"
overlapping_ambiguous = "overlapping-ambiguous"
unmatched = "unmatched"

categories = [matched, contained_ambiguous, overlapping_ambiguous, unmatched]

histogram_bins = (["0%"] + [str(10*i) + "-" + str(10*(i + 1)) + "%"
                            for i in range(10)] + ["100%"])


def non_fullscreen(exposed, config):
    """ Exposed elements covering less than fullscreen_fraction of the
    screen. """
    return [e for e in exposed if e.box.area < config.fullscreen_fraction]


def categorize_screen(annotations, exposed, config):
    """ Compare the annotations of one screen with the accessibility
    elements the app exposes.

    Fullscreen exposed elements are ignored. An annotation is contained
    by an exposed element holding at least containment_match of its
    area, and overlaps one with IoU of at least overlap_match_iou. It is
    matched when one of its containing elements contains no other
    annotation, contained-ambiguous when all its containing elements
    hold several annotations, overlapping-ambiguous when it is only
    overlapped, and unmatched otherwise.

    An unmatched Icon on the same row as a matched Text that is not
    clickable by itself is counted as matched: such icons are decoration
    read together with their label.

    Returns a list with one category per annotation, and a parallel list
    of flags marking the matches made by the icon rule.
    """

    exposed = non_fullscreen(exposed, config)

    contains = np.array([[containment_fraction(a.box, b.box)
                          >= config.containment_match for b in exposed]
                         for a in annotations], dtype=bool).reshape(
                             len(annotations), len(exposed))

    per_exposed = contains.sum(axis=0)

    labels = []
    for i, a in enumerate(annotations):
        holders = np.where(contains[i])[0]

        if holders.shape[0]:
            if np.any(per_exposed[holders] == 1):
                labels.append(matched)

            else:
                labels.append(contained_ambiguous)

        elif any(iou(a.box, b.box) >= config.overlap_match_iou
                 for b in exposed):
            labels.append(overlapping_ambiguous)

        else:
            labels.append(unmatched)

    by_alignment = [False]*len(annotations)

    texts = [a for a, label in zip(annotations, labels)
             if label == matched and a.ui_type == "Text"
             and a.clickable_annotated is not True]

    for i, a in enumerate(annotations):
        if labels[i] != unmatched or a.ui_type != "Icon":
            continue

        if any(y_overlap(a.box, t.box)
               >= config.icon_alignment_y_overlap*a.box.height
               for t in texts):
            labels[i] = matched
            by_alignment[i] = True

    return labels, by_alignment


def _histogram_bin(fraction):
    if fraction <= 0.:
        return histogram_bins[0]

    if fraction >= 1.:
        return histogram_bins[-1]

    return histogram_bins[1 + min(9, int(np.floor(fraction*10.)))]


def gap_analysis(annotation_screens, exposed_screens, config):
    """ Accessibility gap analysis over a set of screens.

    Parameters
    ----------

    annotation_screens : list
        Human annotated screens.

    exposed_screens : list
        The accessibility elements each app exposes, as screens with the
        same ids.

    config : screenpipes.config.heuristic_config
        Matching thresholds.

    Returns
    -------

    report : dict
        "per_screen" (a pandas DataFrame with one row per screen),
        "histogram" (screens per match percentage bin),
        "unmatched_by_type" (unmatched annotations per UI type),
        "labels" (category per annotation id, keyed by screen id) and
        summary fractions.
    """

    rows = []
    unmatched_types = {}
    labels_out = {}

    for exposed, annotated in align_screens(exposed_screens,
                                            annotation_screens):

        labels, by_alignment = categorize_screen(annotated.elements,
                                                 exposed.elements, config)

        labels_out[annotated.screen_id] = dict(
            (a.id, label) for a, label in zip(annotated.elements, labels))

        for a, label in zip(annotated.elements, labels):
            if label == unmatched:
                unmatched_types[a.ui_type] = unmatched_types.get(a.ui_type,
                                                                 0) + 1

        n = len(labels)
        row = {"screen_id": annotated.screen_id, "n_annotations": n,
               "n_exposed": len(exposed.elements),
               "matched_by_alignment": int(sum(by_alignment))}

        for category in categories:
            row[category] = sum(1 for label in labels if label == category)

        row["match_fraction"] = row[matched]/float(n) if n else np.nan
        rows.append(row)

    per_screen = pd.DataFrame(rows, columns=["screen_id", "n_annotations",
                                             "n_exposed",
                                             "matched_by_alignment"]
                              + categories + ["match_fraction"])

    counted = per_screen[per_screen["n_annotations"] > 0]

    histogram = pd.Series(0, index=histogram_bins, name="screens")
    for fraction in counted["match_fraction"]:
        histogram.loc[_histogram_bin(fraction)] += 1

    with_gaps = per_screen[per_screen[unmatched] > 0]
    n_screens = float(len(per_screen))

    summary = {"n_screens": len(per_screen),
               "screens_with_unmatched": (len(with_gaps)/n_screens
                                          if n_screens else 0.),
               "mean_unmatched": (float(with_gaps[unmatched].mean())
                                  if len(with_gaps) else 0.),
               "median_unmatched": (float(with_gaps[unmatched].median())
                                    if len(with_gaps) else 0.),
               "screens_exposing_nothing": (
                   float((per_screen["n_exposed"] == 0).sum())/n_screens
                   if n_screens else 0.)}

    unmatched_by_type = pd.Series(unmatched_types, name="unmatched",
                                  dtype=int).sort_values(ascending=False,
                                                         kind="mergesort")

    return {"per_screen": per_screen, "histogram": histogram,
            "unmatched_by_type": unmatched_by_type, "labels": labels_out,
            "summary": summary}
