from __future__ import print_function, division, absolute_import

from ..semantics.selection_state import select_tab_state, screen_raster

from .tree import accessibility_node, accessibility_tree
from .grouping import (as_nodes, group_tabs, group_text,
                       group_picture_subtitles, group_containers)
from .ordering import order_elements


def _set_tab_states(nodes, raster, config):
    tabs = [i for i, n in enumerate(nodes) if n.kind == "TabButton"]
    flags = select_tab_state([nodes[i].box for i in tabs], raster,
                             bits=config.tint_quantization_bits)

    nodes = list(nodes)
    for i, flag in zip(tabs, flags):
        nodes[i] = accessibility_node.group("TabButton", nodes[i].children,
                                            selected=flag)

    return nodes


def build_tree(screen, config):
    """ Build the accessibility tree of a refined screen.

    Grouping runs in the order tabs, multi-line text, picture
    subtitles, containers; an element claimed by an earlier heuristic
    is not offered to later ones. Tab Buttons then get their selection
    state from the screenshot, and the XY-cut puts everything in
    navigation order.

    Parameters
    ----------

    screen : screenpipes.input.screen
        Refined screen, with semantics applied.

    config : screenpipes.config.heuristic_config
        Grouping and ordering thresholds.
    """

    nodes = as_nodes(screen.elements)

    nodes = group_tabs(nodes, config)
    nodes = group_text(nodes, config)
    nodes = group_picture_subtitles(nodes, config)
    nodes = group_containers(nodes, config)

    if any(n.kind == "TabButton" for n in nodes):
        nodes = _set_tab_states(nodes, screen_raster(screen), config)

    return accessibility_tree(screen.screen_id,
                              order_elements(nodes,
                                             epsilon=config.xycut_epsilon))
