from __future__ import print_function, division, absolute_import

from .tree import (accessibility_node, accessibility_tree, save_trees,
                   load_trees)
from .grouping import (group_tabs, group_text, group_picture_subtitles,
                       group_containers)
from .ordering import (xy_cut, order_elements, insertion_distance,
                       longest_increasing_subsequence)
from .build_tree import build_tree
