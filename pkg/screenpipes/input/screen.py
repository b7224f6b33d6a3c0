from __future__ import print_function, division, absolute_import

import os
import copy
import math
import numbers
import numpy as np

from ..geometry import bbox, clamp_coordinates
from ..exceptions import ScreenValidationError, MissingRaster

from .ui_types import (all_types, detector_types, selection_types,
                       unknown_icon)


class detected_element(object):
    """ One UI element: a detection, an annotation or an exposed
    accessibility element. Treated as an immutable value once built;
    use replace to derive a modified copy.

    Parameters
    ----------

    id : str
        Token unique within the screen.

    box : screenpipes.geometry.bbox
        Normalised bounding box.

    ui_type : str
        One of the names in screenpipes.input.ui_types.all_types.

    confidence : float - optional
        Detector confidence in [0, 1]. Annotations use 1.0.

    text : str - optional
        OCR output (or other alternative text) for the element.

    icon_class : str - optional
        Icon recognition result, only allowed on Icons. The vocabulary
        is open; "unknown" marks an unrecognised icon.

    selected : bool - optional
        Selection state, only allowed on types with selection semantics.

    clickable : bool - optional
        Whether activating the element does something.

    clickable_annotated : bool - optional
        Clickability recorded by a human annotator (annotation data).
    """

    __slots__ = ["id", "box", "ui_type", "confidence", "text", "icon_class",
                 "selected", "clickable", "clickable_annotated"]

    def __init__(self, id, box, ui_type, confidence=1., text=None,
                 icon_class=None, selected=None, clickable=None,
                 clickable_annotated=None):

        if ui_type not in all_types:
            raise ValueError("unknown UI type " + str(ui_type))

        if not isinstance(box, bbox):
            raise ValueError("box must be a bbox")

        confidence = float(confidence)
        if not 0. <= confidence <= 1.:
            raise ValueError("confidence " + str(confidence)
                             + " outside [0, 1]")

        if selected is not None and ui_type not in selection_types:
            raise ValueError("selected set on " + ui_type
                             + ", which has no selection state")

        if icon_class is not None and ui_type != "Icon":
            raise ValueError("icon_class set on " + ui_type)

        self.id = str(id)
        self.box = box
        self.ui_type = ui_type
        self.confidence = confidence
        self.text = text
        self.icon_class = icon_class
        self.selected = selected
        self.clickable = clickable
        self.clickable_annotated = clickable_annotated

    def replace(self, **changes):
        """ Copy of this element with some fields changed. Changing the
        type drops fields the new type cannot carry. """

        values = dict((name, getattr(self, name)) for name in self.__slots__)

        if "ui_type" in changes:
            new_type = changes["ui_type"]
            if new_type != "Icon" and "icon_class" not in changes:
                values["icon_class"] = None

            if new_type not in selection_types and "selected" not in changes:
                values["selected"] = None

        values.update(changes)

        return detected_element(**values)

    def alt_text(self):
        """ What a screen reader would speak for this element alone. """
        if self.text:
            return self.text

        if self.icon_class and self.icon_class != unknown_icon:
            return self.icon_class

        return ""

    def to_dict(self):
        out = {"id": self.id, "box": self.box.to_dict(),
               "type": self.ui_type, "confidence": self.confidence}

        for name in ["text", "icon_class", "selected", "clickable",
                     "clickable_annotated"]:
            value = getattr(self, name)
            if value is not None:
                out[name] = value

        return out

    def __eq__(self, other):
        if not isinstance(other, detected_element):
            return NotImplemented

        return all(getattr(self, n) == getattr(other, n)
                   for n in self.__slots__)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return ("detected_element(" + self.id + ", " + self.ui_type + ", "
                + "%.3f" % self.confidence + ", " + repr(tuple(self.box))
                + ")")


class screen(object):
    """ A container for one screen: its size, its elements and
    optionally its screenshot.

    Parameters
    ----------

    screen_id : str
        Identifier of the screen, unique within a file.

    width_px, height_px : int
        Screen size in pixels.

    elements : list
        detected_element objects. Ids must be unique.

    raster : numpy.ndarray - optional
        RGBA screenshot of shape (height_px, width_px, 4), dtype uint8.

    raster_path : str - optional
        PNG file to load the screenshot from on first access, when no
        raster array is given.
    """

    def __init__(self, screen_id, width_px, height_px, elements,
                 raster=None, raster_path=None):

        self.screen_id = str(screen_id)
        self.width_px = int(width_px)
        self.height_px = int(height_px)
        self.elements = list(elements)
        self.raster_path = raster_path
        self._raster = None

        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("screen dimensions must be positive")

        ids = [e.id for e in self.elements]
        if len(set(ids)) != len(ids):
            raise ValueError("element ids are not unique in screen "
                             + self.screen_id)

        if raster is not None:
            self._raster = self._check_raster(np.asarray(raster))

    def _check_raster(self, raster):
        if raster.ndim == 3 and raster.shape[2] == 3:
            alpha = np.full(raster.shape[:2] + (1,), 255, dtype=np.uint8)
            raster = np.concatenate([raster.astype(np.uint8), alpha], axis=2)

        if raster.shape != (self.height_px, self.width_px, 4):
            raise ValueError("raster shape " + str(raster.shape)
                             + " does not match screen size "
                             + str((self.height_px, self.width_px, 4)))

        return raster.astype(np.uint8)

    @property
    def has_raster(self):
        return self._raster is not None or self.raster_path is not None

    @property
    def raster(self):
        """ The RGBA screenshot, loaded from raster_path on first use.
        Raises MissingRaster when there is none, or the file cannot be
        read or does not match the screen size. """

        if self._raster is None:
            if self.raster_path is None:
                raise MissingRaster("No raster for screen " + self.screen_id)

            from .loading import load_png

            try:
                raster = load_png(self.raster_path)

            except (IOError, OSError) as err:
                raise MissingRaster("Cannot read raster for screen "
                                    + self.screen_id + ": " + str(err))

            try:
                self._raster = self._check_raster(raster)

            except ValueError as err:
                raise MissingRaster("Unusable raster for screen "
                                    + self.screen_id + ": " + str(err))

        return self._raster

    def with_elements(self, elements):
        """ Copy of the screen with a new element list, sharing the
        raster. """
        new = copy.copy(self)
        new.elements = list(elements)

        ids = [e.id for e in new.elements]
        if len(set(ids)) != len(ids):
            raise ValueError("element ids are not unique in screen "
                             + self.screen_id)

        return new

    def element(self, element_id):
        for e in self.elements:
            if e.id == element_id:
                return e

        raise KeyError(element_id)

    def to_dict(self, raster_ref=None):
        out = {"screen_id": self.screen_id, "width_px": self.width_px,
               "height_px": self.height_px,
               "elements": [e.to_dict() for e in self.elements]}

        if raster_ref is not None:
            out["raster"] = raster_ref

        elif self.raster_path is not None:
            out["raster"] = self.raster_path

        return out

    def __getstate__(self):
        # Lazily loaded rasters are reloaded in worker processes.
        state = self.__dict__.copy()
        if self.raster_path is not None:
            state["_raster"] = None

        return state

    def __eq__(self, other):
        if not isinstance(other, screen):
            return NotImplemented

        return (self.screen_id == other.screen_id
                and self.width_px == other.width_px
                and self.height_px == other.height_px
                and self.elements == other.elements)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None


def _is_number(value):
    return (isinstance(value, numbers.Real) and not isinstance(value, bool)
            and math.isfinite(value))


def validate_screen(record, allow_derived=False, base_dir=None):
    """ Turn one JSON screen record into a screen, normalising what can
    be normalised and collecting everything that cannot.

    Boxes sticking out of [0, 1] are clamped with a warning, duplicate
    ids get a numeric suffix with a warning, and an empty screen is a
    warning. Non-positive dimensions, degenerate boxes, unknown types
    and invalid fields are fatal: every one found is listed in the
    raised ScreenValidationError.

    Parameters
    ----------

    record : dict
        Screen record following the documented JSON schema.

    allow_derived : bool - optional
        Accept TabButton and Other, as found in annotation data and
        exposed accessibility elements.

    base_dir : str - optional
        Directory relative raster paths are resolved against.

    Returns
    -------

    screen : screenpipes.input.screen
        The normalised screen.

    warnings : list
        Human readable descriptions of everything that was normalised.
    """

    errors = []
    warns = []

    if not isinstance(record, dict):
        raise ScreenValidationError(None, ["screen record is not an object"])

    screen_id = record.get("screen_id")
    if screen_id is None:
        errors.append("missing screen_id")

    width = record.get("width_px")
    height = record.get("height_px")
    if (not _is_number(width) or not _is_number(height)
            or width <= 0 or height <= 0):
        errors.append("non-positive dimensions")

    raw_elements = record.get("elements", [])
    if not isinstance(raw_elements, list):
        errors.append("elements is not a list")
        raw_elements = []

    allowed = all_types if allow_derived else detector_types

    elements = []
    seen_ids = {}

    for i, raw in enumerate(raw_elements):
        where = "element " + str(raw.get("id", i) if isinstance(raw, dict)
                                 else i)

        if not isinstance(raw, dict):
            errors.append(where + ": not an object")
            continue

        ui_type = raw.get("type")
        if ui_type not in allowed:
            errors.append(where + ": unknown type " + str(ui_type))
            continue

        raw_box = raw.get("box")
        if (not isinstance(raw_box, dict)
                or not all(k in raw_box for k in "ltrb")):
            errors.append(where + ": box needs l, t, r, b")
            continue

        coords = [raw_box[k] for k in "ltrb"]
        if not all(_is_number(c) for c in coords):
            errors.append(where + ": non-finite box coordinates")
            continue

        coords, clamped = clamp_coordinates(*coords)
        if clamped:
            warns.append(where + ": box clamped to [0, 1]")

        try:
            box = bbox(*coords)

        except ValueError:
            errors.append(where + ": degenerate box")
            continue

        confidence = raw.get("confidence", 1.)
        if not _is_number(confidence) or not 0. <= confidence <= 1.:
            errors.append(where + ": confidence outside [0, 1]")
            continue

        element_id = str(raw.get("id", i))
        if element_id in seen_ids:
            seen_ids[element_id] += 1
            new_id = element_id + "_" + str(seen_ids[element_id])
            while new_id in seen_ids:
                seen_ids[element_id] += 1
                new_id = element_id + "_" + str(seen_ids[element_id])

            warns.append(where + ": duplicate id renamed to " + new_id)
            element_id = new_id

        seen_ids.setdefault(element_id, 0)

        try:
            elements.append(detected_element(
                element_id, box, ui_type, confidence=confidence,
                text=raw.get("text"), icon_class=raw.get("icon_class"),
                selected=raw.get("selected"), clickable=raw.get("clickable"),
                clickable_annotated=raw.get("clickable_annotated")))

        except ValueError as err:
            errors.append(where + ": " + str(err))

    if errors:
        raise ScreenValidationError(screen_id, errors)

    if not elements:
        warns.append("screen has no elements")

    raster_path = record.get("raster")
    if raster_path is not None and base_dir is not None:
        if not os.path.isabs(raster_path):
            raster_path = os.path.join(base_dir, raster_path)

    return screen(screen_id, width, height, elements,
                  raster_path=raster_path), warns
