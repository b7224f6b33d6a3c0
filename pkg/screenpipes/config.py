""" This file contains all of the configuration variables for
Screenpipes. Every numeric constant the heuristics depend on lives
here, with a note on where its value comes from. The heuristic_config
class at the bottom bundles them into one record which can be updated
from a JSON file and from the command line. """

from __future__ import print_function, division, absolute_import

import json
import numbers

from copy import deepcopy

from .exceptions import ConfigError
from .input.ui_types import detector_types


""" Post-processing of raw detections. """

# Compiled-in confidence threshold applied to every detector class. The
# tune subcommand writes per-class values that override this. Low
# values favour recall, which suits screen reader users.
default_conf_threshold = 0.3

# IoU at or above which a less confident detection of the same class is
# suppressed by standard Non-Max Suppression.
nms_iou = 0.5

# Duplicates across visually similar classes are only removed above
# this IoU, so that nested elements (an Icon on a Picture) survive.
dedup_iou = 0.8

# Groups of visually similar classes the cross-class pass works within.
dedup_groups = [["Picture", "Icon"],
                ["SegmentedControl", "TextField", "Container"]]

# A Text is on the same row as a Segmented Control when their vertical
# overlap is at least this fraction of the Text height.
sc_row_y_overlap_min = 0.5


""" Matching thresholds shared by repair, grouping and gap analysis. """

# Fraction of an element's area that must lie inside another box for
# it to count as contained.
containment_match = 0.85

# Minimum IoU for two boxes to count as overlapping in gap analysis.
overlap_match_iou = 0.05

# Containment fraction needed to join a Container group.
container_membership = 0.85

# Exposed accessibility elements covering at least this fraction of the
# screen are ignored by gap analysis.
fullscreen_fraction = 0.98

# An Icon is aligned with a Text row when their vertical overlap is at
# least this fraction of the Icon height.
icon_alignment_y_overlap = 0.5


""" Grouping and ordering. All lengths are fractions of the screen. """

# Tab bar candidates must start in this bottom fraction of the screen.
tab_zone_fraction = 0.20

# Maximum distance from the bottom-most element's bottom edge to the
# top of a tab bar candidate.
tab_height_tolerance = 0.08

# Maximum vertical gap between a Picture and its subtitle.
subtitle_y_gap = 0.03

# Minimum fraction of the subtitle width overlapping the Picture.
subtitle_x_overlap_min = 0.5

# Whitespace narrower than this is not a cut in XY-cut, and tops closer
# than this count as a tie.
xycut_epsilon = 1e-6


""" Selection state. """

# Bits kept per colour channel before ranking colours in a crop.
tint_quantization_bits = 5

# Height of the strip at the bottom of a segment checked for an
# underline bar, as a fraction of the segment height.
sc_bottom_strip_fraction = 0.15


""" Clickability. """

# Precision the calibrated icon clickability threshold has to keep.
clickability_target_precision = 0.90

# Optional floor on validation recall for a threshold to count. Off by
# default: any threshold reaching the target precision is accepted.
clickability_min_recall = 0.

# Boosted regression tree training defaults.
gbt_n_trees = 50
gbt_max_depth = 3
gbt_learning_rate = 0.1
gbt_min_samples_leaf = 5
gbt_validation_fraction = 0.3
gbt_seed = 0


""" Evaluation. """

# A detection matches a ground truth element when IoU is above this.
match_iou = 0.5

# Headline numbers reported by the original study, printed beside the
# toolkit's own results for context only.
reference_numbers = {"mean_ap_iou": 0.713,
                     "mean_ap_center": 0.754,
                     "weighted_mean_ap_iou_text": 0.827,
                     "weighted_mean_ap_iou_table": 0.875,
                     "grouping_reduction": 0.485,
                     "incorrectly_grouped": 0.056,
                     "ordering_perfect": 0.737,
                     "ordering_within_tenth": 0.908,
                     "ordering_mean_distance": 0.67,
                     "tab_state_accuracy": 0.905,
                     "sc_state_accuracy": 0.736,
                     "clickability_recall": 0.736,
                     "gap_screens_unmatched": 0.59}


_ratio_fields = ["nms_iou", "dedup_iou", "sc_row_y_overlap_min",
                 "containment_match", "overlap_match_iou",
                 "container_membership", "fullscreen_fraction",
                 "icon_alignment_y_overlap", "tab_zone_fraction",
                 "tab_height_tolerance", "subtitle_y_gap",
                 "subtitle_x_overlap_min", "sc_bottom_strip_fraction",
                 "clickability_target_precision", "clickability_min_recall",
                 "match_iou", "default_conf_threshold"]


class heuristic_config(object):
    """ The single auditable record of every constant the pipeline and
    the evaluation depend on. Defaults come from the module variables
    above.

    Parameters
    ----------

    overrides : dict - optional
        Field names and values to replace the defaults with. Unknown
        field names raise a ConfigError.
    """

    fields = (["per_class_conf_threshold", "dedup_groups",
               "tint_quantization_bits", "xycut_epsilon"]
              + _ratio_fields)

    def __init__(self, overrides=None):

        g = globals()
        for name in self.fields:
            if name == "per_class_conf_threshold":
                continue

            setattr(self, name, deepcopy(g[name]))

        self.per_class_conf_threshold = dict((t, default_conf_threshold)
                                             for t in detector_types)

        if overrides is not None:
            self.update(overrides)

    @classmethod
    def from_file(cls, path, overrides=None):
        """ Load defaults, then the JSON config file at path, then any
        further overrides. """

        with open(path) as f:
            try:
                values = json.load(f)

            except ValueError as err:
                raise ConfigError("Config file " + str(path)
                                  + " is not valid JSON: " + str(err))

        if not isinstance(values, dict):
            raise ConfigError("Config file " + str(path)
                              + " must contain a JSON object.")

        config = cls(values)

        if overrides is not None:
            config.update(overrides)

        return config

    def update(self, overrides):
        """ Replace fields with the values in overrides and re-check the
        invariants. per_class_conf_threshold is merged, not replaced, so
        an overlay may list only some classes. """

        unknown = [k for k in overrides if k not in self.fields]
        if unknown:
            raise ConfigError("Unknown config fields: "
                              + ", ".join(sorted(unknown)))

        for key, value in overrides.items():
            if key == "per_class_conf_threshold":
                merged = dict(self.per_class_conf_threshold)
                merged.update(value)
                value = merged

            setattr(self, key, deepcopy(value))

        self.check()

    def set_from_strings(self, assignments):
        """ Apply command line overrides of the form name=value. Values
        are parsed as JSON so numbers, lists and dicts all work. """

        overrides = {}
        for assignment in assignments:
            if "=" not in assignment:
                raise ConfigError("Expected name=value, got " + assignment)

            name, raw = assignment.split("=", 1)

            try:
                overrides[name.strip()] = json.loads(raw)

            except ValueError:
                overrides[name.strip()] = raw

        self.update(overrides)

    def check(self):
        """ Raise ConfigError listing every invariant the record breaks. """

        problems = []

        for name in _ratio_fields:
            value = getattr(self, name)
            if (not isinstance(value, numbers.Real)
                    or not 0. <= value <= 1.):
                problems.append(name + " must be a ratio in [0, 1]")

        for ui_type, value in self.per_class_conf_threshold.items():
            if ui_type not in detector_types:
                problems.append("per_class_conf_threshold has unknown type "
                                + str(ui_type))

            elif (not isinstance(value, numbers.Real)
                    or not 0. <= value <= 1.):
                problems.append("threshold for " + ui_type
                                + " must be in [0, 1]")

        if not self.dedup_iou > self.overlap_match_iou:
            problems.append("dedup_iou must exceed overlap_match_iou")

        for group in self.dedup_groups:
            for ui_type in group:
                if ui_type not in detector_types:
                    problems.append("dedup_groups has unknown type "
                                    + str(ui_type))

        bits = self.tint_quantization_bits
        if not isinstance(bits, numbers.Integral) or not 1 <= bits <= 8:
            problems.append("tint_quantization_bits must be in 1..8")

        if problems:
            raise ConfigError("; ".join(problems))

    def to_dict(self):
        return dict((name, deepcopy(getattr(self, name)))
                    for name in self.fields)

    def save(self, path):
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=1, sort_keys=True)
            f.write("\n")


class training_config(object):
    """ Boosted regression tree settings for the clickability model.

    Parameters
    ----------

    n_trees : int - optional
        Number of boosting rounds.

    max_depth : int - optional
        Depth limit of each regression tree.

    learning_rate : float - optional
        Shrinkage applied to every tree's contribution.

    min_samples_leaf : int - optional
        Smallest number of training rows a leaf may hold.

    validation_fraction : float - optional
        Share of the labelled set held out for threshold calibration.

    seed : int - optional
        Seed for the train/validation split.
    """

    def __init__(self, n_trees=gbt_n_trees, max_depth=gbt_max_depth,
                 learning_rate=gbt_learning_rate,
                 min_samples_leaf=gbt_min_samples_leaf,
                 validation_fraction=gbt_validation_fraction, seed=gbt_seed):

        self.n_trees = int(n_trees)
        self.max_depth = int(max_depth)
        self.learning_rate = float(learning_rate)
        self.min_samples_leaf = int(min_samples_leaf)
        self.validation_fraction = float(validation_fraction)
        self.seed = int(seed)

        if self.n_trees < 1 or self.max_depth < 1:
            raise ConfigError("n_trees and max_depth must be positive.")

        if not 0. < self.validation_fraction < 1.:
            raise ConfigError("validation_fraction must be in (0, 1).")
