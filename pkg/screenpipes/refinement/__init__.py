from __future__ import print_function, division, absolute_import

from .suppression import (filter_by_confidence, nms_within_class,
                          dedup_cross_class, greedy_suppression)
from .repair import repair_segmented_controls, merge_ocr
from .refine_screen import refine_screen, stage_record
