from __future__ import print_function, division, absolute_import

from loguru import logger

from . import input
from . import refinement
from . import semantics
from . import structure
from . import evaluation
from . import synthgen
from . import plotting
from . import catalogue

from . import config
from . import utils

from .geometry import bbox
from .config import heuristic_config, training_config
from .input.screen import detected_element, screen
from .refinement.refine_screen import refine_screen
from .semantics.apply_semantics import apply_semantics
from .structure.build_tree import build_tree
from .evaluation.report import evaluate

from .catalogue.process_catalogue import process_catalogue, process_screen

logger.disable("screenpipes")
