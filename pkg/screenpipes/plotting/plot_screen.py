from __future__ import print_function, division, absolute_import

import numpy as np

try:
    import matplotlib as mpl
    import matplotlib.pyplot as plt

except RuntimeError:
    pass

from ..semantics.selection_state import screen_raster
from .general import *


def plot_screen(screen, tree=None, show=False, save=False):
    """ Draw a screen with its elements outlined by UI type. When a tree
    is given, groups are outlined in black and each top-level node is
    numbered in navigation order.

    Parameters
    ----------

    screen : screenpipes.input.screen
        Screen to draw. Its screenshot is used when available.

    tree : screenpipes.structure.accessibility_tree - optional
        Tree built for the screen.

    show : bool - optional
        Show the figure interactively.

    save : str - optional
        Path to save the figure to.
    """

    update_rcParams()

    w, h = screen.width_px, screen.height_px

    fig = plt.figure(figsize=(4., 4.*h/float(w)))
    ax = plt.subplot()

    raster = screen_raster(screen)
    if raster is None:
        raster = np.full((h, w, 4), 255, dtype=np.uint8)

    ax.imshow(raster, extent=(0, w, h, 0), zorder=1)

    for e in screen.elements:
        add_box(ax, e.box, w, h, color=type_colors[e.ui_type], lw=1.5)

    if tree is not None:
        for group in tree.groups():
            add_box(ax, group.box, w, h, color="black", lw=1.,
                    linestyle=group_styles[group.kind], zorder=5)

        for i, node in enumerate(tree.nodes):
            ax.text(node.box.left*w, node.box.top*h, str(i + 1),
                    fontsize=8, color="white", va="top", ha="left",
                    zorder=6, bbox={"facecolor": "black", "pad": 1.,
                                    "lw": 0})

    ax.set_xlim(0, w)
    ax.set_ylim(h, 0)
    ax.set_xticks([])
    ax.set_yticks([])
    ax.set_title(screen.screen_id, fontsize=10)

    finish(fig, save=save, show=show)

    return fig, ax
