from __future__ import print_function, division, absolute_import

from ..input.ui_types import intrinsic_state

from .selection_state import select_segmented_state, sc_rows, screen_raster
from .clickability import score_clickability


def apply_semantics(screen, config, model=None):
    """ Fill in selection state and clickability on a refined screen.

    Checkboxes and toggles take their state from the detected subtype.
    Each row of two or more Segmented Controls gets the state the
    segmented control rules find. Tab Buttons are handled after
    grouping, since they only exist once tabs are grouped. Clickability
    comes from score_clickability.

    Returns a new screen; element ids and order are unchanged.
    """

    raster = screen_raster(screen)
    updates = {}

    for row in sc_rows(screen.elements, config):
        if len(row) < 2:
            continue

        flags = select_segmented_state(row, raster,
                                       bits=config.tint_quantization_bits,
                                       fraction=config.sc_bottom_strip_fraction)

        for element, flag in zip(row, flags):
            updates[element.id] = flag

    elements = []
    for e in screen.elements:
        selected = e.selected
        if e.ui_type in intrinsic_state:
            selected = intrinsic_state[e.ui_type]

        elif e.id in updates:
            selected = updates[e.id]

        clickable = score_clickability(model, e)

        elements.append(e.replace(selected=selected, clickable=clickable))

    return screen.with_elements(elements)
