from __future__ import print_function, division, absolute_import

import os
import pandas as pd

from loguru import logger

from .. import config
from .. import utils

from .matching import match_spec
from .average_precision import average_precision, ap_table
from .confusion import confusion_matrix
from .structure_metrics import (grouping_metrics, ordering_metrics, tree_orders,
                                selection_metrics)


def evaluate(pred_screens, gt_screens, produced_trees=None, truth_trees=None,
             iou_threshold=config.match_iou):
    """ Full detection evaluation, plus grouping and ordering when trees
    are given.

    Returns a dict with AP under both matching criteria, the ap_table,
    the confusion matrix, grouping and ordering statistics (or None) and
    the reference numbers reported for the original system.
    """

    ap = dict((criterion, average_precision(pred_screens, gt_screens,
                                            match_spec(criterion,
                                                       iou_threshold)))
              for criterion in ["iou_over_half", "center_hit"])

    report = {"ap": ap,
              "ap_table": ap_table(ap["iou_over_half"], ap["center_hit"]),
              "confusion": confusion_matrix(pred_screens, gt_screens,
                                            iou_threshold=iou_threshold),
              "grouping": None,
              "ordering": None,
              "selection": None,
              "reference": dict(config.reference_numbers)}

    if produced_trees is not None and truth_trees is not None:
        report["grouping"] = grouping_metrics(produced_trees, truth_trees)
        report["ordering"] = ordering_metrics(tree_orders(produced_trees),
                                              tree_orders(truth_trees))
        report["selection"] = selection_metrics(produced_trees,
                                                truth_trees)

    return report


def summary_lines(report):
    """ Human readable headline numbers beside the reference values. """

    ref = report["reference"]

    def pct(value):
        return "n/a" if value is None else "%.1f%%" % (100.*value)

    lines = []
    for criterion, key in [("iou_over_half", "mean_ap_iou"),
                           ("center_hit", "mean_ap_center")]:
        lines.append("mean AP (" + criterion + "): "
                     + pct(report["ap"][criterion]["mean_ap"])
                     + " (reference " + pct(ref[key]) + ")")

    lines.append("weighted mean AP (iou_over_half): "
                 + pct(report["ap"]["iou_over_half"]["weighted_mean_ap"])
                 + " (reference " + pct(ref["weighted_mean_ap_iou_text"])
                 + " / " + pct(ref["weighted_mean_ap_iou_table"]) + ")")

    if report["grouping"] is not None:
        g = report["grouping"]
        lines.append("grouping reduction: " + pct(g["reduction"])
                     + " (reference " + pct(ref["grouping_reduction"]) + ")")
        lines.append("incorrectly grouped: " + pct(g["incorrect_fraction"])
                     + " (reference " + pct(ref["incorrectly_grouped"]) + ")")

    if report["ordering"] is not None:
        o = report["ordering"]
        lines.append("perfect order: " + pct(o["perfect"]) + " (reference "
                     + pct(ref["ordering_perfect"]) + ")")
        lines.append("under 1 error per 10 elements: "
                     + pct(o["within_tenth"]) + " (reference "
                     + pct(ref["ordering_within_tenth"]) + ")")

    if report.get("selection") is not None:
        s = report["selection"]
        lines.append("tab state accuracy: " + pct(s["tab_state_accuracy"])
                     + " (reference " + pct(ref["tab_state_accuracy"]) + ")")
        lines.append("segmented control state accuracy: "
                     + pct(s["sc_state_accuracy"]) + " (reference "
                     + pct(ref["sc_state_accuracy"]) + ")")

    return lines


def _json_ready(report):
    out = {"ap": report["ap"],
           "confusion": dict((row, dict(report["confusion"].loc[row]))
                             for row in report["confusion"].index),
           "grouping": report["grouping"],
           "ordering": report["ordering"],
           "selection": report["selection"],
           "reference": report["reference"]}

    return out


def write_evaluation(report, out_dir, fmt="json"):
    """ Write reports/evaluation.json under out_dir. With fmt "csv" the
    AP table, confusion matrix and PR curve samples go to CSV too. """

    utils.make_dirs(out_dir)
    utils.write_json(os.path.join(out_dir, "reports", "evaluation.json"),
                     _json_ready(report))

    if fmt == "csv":
        reports = os.path.join(out_dir, "reports")
        report["ap_table"].to_csv(os.path.join(reports, "ap_table.csv"))
        report["confusion"].to_csv(os.path.join(reports,
                                                "confusion_matrix.csv"))

        pr_curves(report).to_csv(os.path.join(reports, "pr_curves.csv"),
                                 index=False)

    for line in summary_lines(report):
        logger.info(line)


def pr_curves(report):
    """ Long-form pandas table of PR curve samples for every class and
    criterion. """

    frames = []
    for criterion, result in report["ap"].items():
        for ui_type, entry in result["per_class"].items():
            frames.append(pd.DataFrame({"criterion": criterion,
                                        "ui_type": ui_type,
                                        "confidence": entry["confidence"],
                                        "precision": entry["precision"],
                                        "recall": entry["recall"]}))

    if not frames:
        return pd.DataFrame(columns=["criterion", "ui_type", "confidence",
                                     "precision", "recall"])

    return pd.concat(frames, ignore_index=True)


def write_gap_report(gap, out_dir):
    """ Write the gap analysis: summary and labels as JSON, per-screen
    table, histogram and unmatched types as CSV. """

    utils.make_dirs(out_dir)
    reports = os.path.join(out_dir, "reports")

    utils.write_json(os.path.join(reports, "gap_analysis.json"),
                     {"summary": gap["summary"], "labels": gap["labels"],
                      "reference": {"screens_with_unmatched":
                                    config.reference_numbers[
                                        "gap_screens_unmatched"]}})

    gap["per_screen"].to_csv(os.path.join(reports, "gap_per_screen.csv"),
                             index=False)
    gap["histogram"].to_csv(os.path.join(reports, "gap_histogram.csv"),
                            index_label="match_percentage")
    gap["unmatched_by_type"].to_csv(os.path.join(reports,
                                                 "gap_unmatched_types.csv"),
                                    index_label="ui_type")

    logger.info("{:.1f}% of screens have unmatched annotations "
                "(reference {:.1f}%).",
                100.*gap["summary"]["screens_with_unmatched"],
                100.*config.reference_numbers["gap_screens_unmatched"])
