from __future__ import print_function, division, absolute_import

from .matching import (match_spec, match_result, match_detections,
                       greedy_match, align_screens)
from .average_precision import (average_precision, all_points_ap, pr_curve,
                                ap_table)
from .confusion import confusion_matrix
from .tuning import tune_thresholds, best_threshold, f_beta
from .structure_metrics import (grouping_metrics, ordering_metrics,
                                compare_groups, tree_orders,
                                selection_metrics)
from .gap_analysis import gap_analysis, categorize_screen
from .report import (evaluate, write_evaluation, write_gap_report,
                     summary_lines, pr_curves)
