from __future__ import print_function, division, absolute_import

from .suppression import filter_by_confidence, nms_within_class, \
    dedup_cross_class
from .repair import repair_segmented_controls, merge_ocr


def stage_record(stage, before, after):
    """ Element accounting for one pipeline stage. Elements are tracked
    by id, so in == out + removed - added always holds. """

    ids_before = set(e.id for e in before)
    ids_after = set(e.id for e in after)

    return {"stage": stage,
            "in": len(before),
            "out": len(after),
            "removed": len(ids_before - ids_after),
            "added": len(ids_after - ids_before)}


def refine_screen(screen, config, ocr_boxes=None):
    """ Run the refinement stage on one screen: confidence filtering,
    per-class Non-Max Suppression, duplicate removal across similar
    types, segmented control repair, then OCR merging.

    Parameters
    ----------

    screen : screenpipes.input.screen
        Raw detections.

    config : screenpipes.config.heuristic_config
        Thresholds to use.

    ocr_boxes : list - optional
        (bbox, text) OCR observations for this screen.

    Returns
    -------

    refined : screenpipes.input.screen
        A new screen with the refined elements. The raster is shared.

    diagnostics : list
        One stage_record dict per step.
    """

    diagnostics = []
    elements = screen.elements

    steps = [("filter", lambda e: filter_by_confidence(e, config)),
             ("nms", lambda e: nms_within_class(e, config.nms_iou)),
             ("dedup", lambda e: dedup_cross_class(e, config)),
             ("repair", lambda e: repair_segmented_controls(e, config))]

    if ocr_boxes:
        steps.append(("ocr", lambda e: merge_ocr(e, ocr_boxes)))

    for stage, step in steps:
        refined = step(elements)
        diagnostics.append(stage_record(stage, elements, refined))
        elements = refined

    return screen.with_elements(elements), diagnostics
