""" The UI element taxonomy. Detector output is restricted to the 13
detector classes; TabButton and Other only appear in pipeline output
or in annotation data. Tab Bar Items are annotated as Icon and/or Text
and regrouped downstream, so they are not a detector class. """

from __future__ import print_function, division, absolute_import


# The 13 classes a detector may emit.
detector_types = ["CheckboxSelected", "CheckboxUnselected", "Container",
                  "Dialog", "Icon", "PageControl", "Picture",
                  "SegmentedControl", "Slider", "Text", "TextField",
                  "ToggleSelected", "ToggleUnselected"]

# Classes produced downstream or present in annotation data only.
derived_types = ["TabButton", "Other"]

all_types = detector_types + derived_types

# Types for which a selected flag is meaningful.
selection_types = ["CheckboxSelected", "CheckboxUnselected",
                   "ToggleSelected", "ToggleUnselected",
                   "SegmentedControl", "TabButton"]

# Types whose selection state is encoded by the detector class itself.
intrinsic_state = {"CheckboxSelected": True,
                   "CheckboxUnselected": False,
                   "ToggleSelected": True,
                   "ToggleUnselected": False}

# Types that are interactive by construction, whatever they look like.
interactive_types = ["TextField", "Slider", "PageControl",
                     "CheckboxSelected", "CheckboxUnselected",
                     "ToggleSelected", "ToggleUnselected",
                     "SegmentedControl"]

# Group kinds an accessibility tree may contain.
group_kinds = ["TabButton", "Container", "TextBlock", "PictureWithSubtitle"]

# Placeholder icon class when icon recognition has no answer.
unknown_icon = "unknown"
