from __future__ import print_function, division, absolute_import

from ..geometry import (y_overlap, containment_fraction, intersection_area,
                        iou)
from ..input.screen import detected_element


def _on_sc_row(text, controls, config):
    """ Whether text shares a row with any of the controls and is not
    already inside one of them. """

    min_overlap = config.sc_row_y_overlap_min*text.box.height

    on_row = any(y_overlap(text.box, sc.box) >= min_overlap
                 for sc in controls)

    inside = any(containment_fraction(text.box, sc.box)
                 >= config.containment_match for sc in controls)

    return on_row and not inside


def repair_segmented_controls(elements, config):
    """ Retype Text detections found on the row of a detected Segmented
    Control, but not inside any Segmented Control, to Segmented Control.
    The detector often finds only a subset of the segments in a row and
    reads the rest as plain text.

    Texts are only compared against the controls detected before the
    call, never against texts retyped by it, so a row cannot creep up or
    down through a chain of overlapping texts. Confidence and text are
    kept.
    """

    elements = list(elements)
    controls = [e for e in elements if e.ui_type == "SegmentedControl"]

    if not controls:
        return elements

    return [e.replace(ui_type="SegmentedControl")
            if e.ui_type == "Text" and _on_sc_row(e, controls, config)
            else e for e in elements]


def _new_id(existing, stem="ocr"):
    n = 0
    while stem + "-" + str(n) in existing:
        n += 1

    return stem + "-" + str(n)


def merge_ocr(elements, ocr_boxes):
    """ Bring OCR results into the detections.

    Parameters
    ----------

    elements : list
        detected_element objects after suppression.

    ocr_boxes : list
        (bbox, text) tuples from an OCR engine.

    An OCR box with no overlap at all with any element is text the
    detector missed and is appended as a new Text with confidence 1.
    An overlapping box instead gives its string to the best-IoU Text
    that has no text yet; if there is none (for instance it only
    overlaps an Icon) it is discarded. A box whose string is already
    carried by an element it overlaps is skipped, so merging the same
    OCR results twice changes nothing.
    """

    elements = list(elements)
    ids = set(e.id for e in elements)

    for box, text in ocr_boxes:
        overlaps = [i for i, e in enumerate(elements)
                    if intersection_area(box, e.box) > 0.]

        if any(elements[i].text == text for i in overlaps):
            continue

        if not overlaps:
            new_id = _new_id(ids)
            ids.add(new_id)
            elements.append(detected_element(new_id, box, "Text",
                                             confidence=1., text=text))
            continue

        takers = [i for i in overlaps
                  if elements[i].ui_type == "Text" and not elements[i].text]

        if takers:
            best = max(takers, key=lambda i: iou(box, elements[i].box))
            elements[best] = elements[best].replace(text=text)

    return elements
