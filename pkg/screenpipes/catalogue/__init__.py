from __future__ import print_function, division, absolute_import

from .process_catalogue import process_catalogue, process_screen
