from __future__ import print_function, division, absolute_import

import numpy as np

try:
    import matplotlib as mpl
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

except RuntimeError:
    pass

from ..input.ui_types import all_types, group_kinds


# One colour per UI type, and a line style per group kind.
type_colors = dict(zip(all_types, plt.cm.tab20(np.linspace(0., 1.,
                                                           len(all_types)))))

group_styles = dict(zip(group_kinds, ["-", "--", ":", "-."]))


def update_rcParams():
    mpl.rcParams["lines.linewidth"] = 2.
    mpl.rcParams["axes.linewidth"] = 1.5
    mpl.rcParams["axes.labelsize"] = 16.
    mpl.rcParams["xtick.labelsize"] = 12
    mpl.rcParams["xtick.direction"] = "in"
    mpl.rcParams["ytick.labelsize"] = 12
    mpl.rcParams["ytick.direction"] = "in"
    mpl.rcParams["text.usetex"] = False


def add_box(ax, box, width_px, height_px, color="black", lw=1.,
            linestyle="-", zorder=4):
    """ Outline a normalised box on axes showing a width_px x height_px
    image. """

    patch = Rectangle((box.left*width_px, box.top*height_px),
                      box.width*width_px, box.height*height_px,
                      fill=False, edgecolor=color, lw=lw,
                      linestyle=linestyle, zorder=zorder)

    ax.add_patch(patch)

    return patch


def finish(fig, save=False, show=False):
    """ Save to the path in save, if any, and show or close. """

    if save:
        plt.savefig(save, bbox_inches="tight")

    if show:
        plt.show()

    if save or show:
        plt.close(fig)
