from __future__ import print_function, division, absolute_import

from . import ui_types

from .screen import detected_element, screen, validate_screen
from .loading import (load_json, load_screens, load_ocr, save_ocr,
                      save_screens, load_png, save_png)
