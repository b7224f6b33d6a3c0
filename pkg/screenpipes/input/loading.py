from __future__ import print_function, division, absolute_import

import os
import json
import warnings
import numpy as np

from loguru import logger
from PIL import Image

from ..geometry import bbox, clamp_coordinates
from ..exceptions import (SchemaError, ScreenValidationError,
                          ScreenValidationWarning)
from .. import utils

from .screen import validate_screen


def load_json(path):
    """ Read a JSON file, turning decode failures into a SchemaError
    that carries the line and column of the problem. """

    with open(path) as f:
        text = f.read()

    try:
        return json.loads(text)

    except ValueError as err:
        raise SchemaError(path, err.msg if hasattr(err, "msg") else str(err),
                          line=getattr(err, "lineno", None),
                          column=getattr(err, "colno", None))


def load_screens(path, allow_derived=False):
    """ Load a screens file: a JSON array of screen records.

    Parameters
    ----------

    path : str
        Path to the screens file.

    allow_derived : bool - optional
        Accept TabButton and Other elements (annotation data).

    Returns
    -------

    screens : list
        Validated screen objects, in file order.

    failures : list
        (screen_id, ScreenValidationError) for each record that could not
        be used. These screens are skipped, not fatal.
    """

    records = load_json(path)

    if not isinstance(records, list):
        raise SchemaError(path, "top level must be an array of screens")

    base_dir = os.path.dirname(os.path.abspath(path))

    screens = []
    failures = []
    seen = set()

    for i, record in enumerate(records):
        try:
            screen, notes = validate_screen(record,
                                            allow_derived=allow_derived,
                                            base_dir=base_dir)

        except ScreenValidationError as err:
            logger.warning("Skipping screen {}: {}", err.screen_id,
                           "; ".join(err.violations))

            failures.append((err.screen_id, err))
            continue

        if screen.screen_id in seen:
            err = ScreenValidationError(screen.screen_id,
                                        ["duplicate screen_id in file"])
            logger.warning("Skipping screen {}: duplicate screen_id.",
                           screen.screen_id)

            failures.append((screen.screen_id, err))
            continue

        seen.add(screen.screen_id)

        for note in notes:
            warnings.warn("Screen " + screen.screen_id + ": " + note,
                          ScreenValidationWarning)

        screens.append(screen)

    logger.info("Loaded {} screens from {}.", len(screens), path)

    return screens, failures


def load_ocr(path):
    """ Load OCR observations: a JSON object mapping screen_id to a list
    of {"box": {l, t, r, b}, "text": str}. Returns a dict mapping each
    screen_id to a list of (bbox, text) tuples. Boxes are clamped like
    element boxes; degenerate ones are dropped with a warning. """

    raw = load_json(path)

    if not isinstance(raw, dict):
        raise SchemaError(path, "top level must be an object keyed by "
                          + "screen_id")

    ocr = {}
    for screen_id, observations in raw.items():
        if not isinstance(observations, list):
            raise SchemaError(path, "OCR entry for " + str(screen_id)
                              + " must be an array")

        ocr[screen_id] = []
        for obs in observations:
            try:
                coords = [obs["box"][k] for k in "ltrb"]
                coords, _ = clamp_coordinates(*coords)
                box = bbox(*coords)

            except (KeyError, TypeError, ValueError):
                warnings.warn("Dropping malformed OCR box on screen "
                              + str(screen_id), ScreenValidationWarning)
                continue

            ocr[screen_id].append((box, str(obs.get("text", ""))))

    return ocr


def save_ocr(path, ocr):
    out = {}
    for screen_id, observations in ocr.items():
        out[screen_id] = [{"box": box.to_dict(), "text": text}
                          for box, text in observations]

    utils.write_json(path, out)


def save_screens(path, screens, raster_refs=None):
    """ Write screens in the same schema load_screens reads. raster_refs
    optionally maps screen_id to the PNG path to record. """

    raster_refs = raster_refs or {}
    utils.write_json(path, [s.to_dict(raster_ref=raster_refs.get(s.screen_id))
                            for s in screens])


def load_png(path):
    """ Read a PNG as an RGBA uint8 array of shape (height, width, 4). """

    with Image.open(path) as image:
        return np.asarray(image.convert("RGBA"), dtype=np.uint8).copy()


def save_png(path, raster):
    Image.fromarray(np.asarray(raster, dtype=np.uint8), mode="RGBA").save(path)
