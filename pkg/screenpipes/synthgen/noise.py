from __future__ import print_function, division, absolute_import

import numpy as np

from ..geometry import bbox, clamp_coordinates
from .. import config


def detection_view(element):
    """ What a detector reports for an annotated element: box, type,
    confidence, text and icon class, without annotated states. """

    return element.replace(selected=None, clickable=None,
                           clickable_annotated=None)


def jitter_box(box, sigma, rng):
    """ box with each edge moved by Gaussian noise of sigma times the
    box size. Falls back to box when the result would be degenerate. """

    if sigma <= 0.:
        return box

    dx, dy = sigma*box.width, sigma*box.height
    moved = [box.left + rng.normal(0., dx), box.top + rng.normal(0., dy),
             box.right + rng.normal(0., dx), box.bottom + rng.normal(0., dy)]

    moved, _ = clamp_coordinates(*moved)
    if moved[2] <= moved[0] or moved[3] <= moved[1]:
        return box

    return bbox(*moved)


def confused_type(ui_type, confusion, rng):
    """ Draw the type a detector reports for ui_type. """

    row = confusion.get(ui_type, {})
    if not row:
        return ui_type

    targets = sorted(row)
    p = [row[t] for t in targets]
    draw = rng.random()

    cumulative = np.cumsum(p)
    hit = np.searchsorted(cumulative, draw, side="right")

    return targets[hit] if hit < len(targets) else ui_type


def confidence_draw(scale, rng):
    if scale <= 0.:
        return 1.

    return float(np.clip(1. - abs(rng.normal(0., scale)), 0.05, 1.))


def _sister_type(ui_type, rng):
    for group in config.dedup_groups:
        if ui_type in group and len(group) > 1:
            others = [t for t in group if t != ui_type]
            return others[int(rng.integers(len(others)))]

    return ui_type


def perturb(elements, spec, rng):
    """ Noisy detections of annotated elements.

    Each element is dropped with its type's drop probability, otherwise
    reported with a possibly confused type, a jittered box and a
    confidence below one. With its type's duplicate probability a
    second, lower-confidence detection with a nearly identical box is
    added, half the time under another type of the same deduplication
    group. Duplicates take the id of their source plus "-dup1".

    Parameters
    ----------

    elements : list
        Annotated screenpipes.input.detected_element objects.

    spec : screenpipes.synthgen.gen_spec
        Noise settings.

    rng : numpy.random.Generator
        The screen's random stream.
    """

    noise = spec.noise
    out = []

    for e in elements:
        if rng.random() < spec.probability("drop_prob", e.ui_type):
            continue

        ui_type = confused_type(e.ui_type, noise["confusion"], rng)
        det = detection_view(e).replace(
            ui_type=ui_type, box=jitter_box(e.box, noise["jitter"], rng),
            confidence=confidence_draw(noise["confidence_noise"], rng))

        out.append(det)

        if rng.random() < spec.probability("duplicate_prob", e.ui_type):
            dup_type = ui_type
            if rng.random() < 0.5:
                dup_type = _sister_type(ui_type, rng)

            out.append(det.replace(
                id=det.id + "-dup1", ui_type=dup_type,
                box=jitter_box(det.box, min(0.02, noise["jitter"]), rng),
                confidence=det.confidence*rng.uniform(0.5, 0.95)))

    return out
