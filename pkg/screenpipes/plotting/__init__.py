from __future__ import print_function, division, absolute_import

from .general import update_rcParams
from .plot_screen import plot_screen
from .plot_evaluation import (plot_pr_curves, plot_gap_histogram,
                              plot_unmatched_types)
