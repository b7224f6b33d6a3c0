from __future__ import print_function, division, absolute_import

from .tint import (tint_profile, extract_tint, find_outlier, color_distance,
                   ranked_colors)
from .selection_state import (select_tab_state, select_segmented_state,
                              sc_rows, screen_raster)
from .boosted_trees import boosted_trees, regression_tree
from .clickability import (clickability_model, train_clickability,
                           score_clickability, calibrate_threshold,
                           icon_features)
from .apply_semantics import apply_semantics
