from __future__ import print_function, division, absolute_import

import os
import json
import numpy as np


def make_dirs(out_dir=".", run="."):
    """ Make the local Screenpipes output structure in out_dir. """

    for sub in ["", "/trees", "/reports", "/plots"]:
        if not os.path.exists(out_dir + sub):
            os.makedirs(out_dir + sub)

    if run != ".":
        for sub in ["/trees/", "/reports/", "/plots/"]:
            if not os.path.exists(out_dir + sub + run):
                os.makedirs(out_dir + sub + run)


def write_json(path, obj):
    """ Write obj as JSON with sorted keys, so that equal inputs give
    byte-identical files. """

    with open(path, "w") as f:
        json.dump(obj, f, indent=1, sort_keys=True, default=_to_builtin)
        f.write("\n")


def _to_builtin(value):
    """ json fallback for numpy scalars and arrays. """

    if isinstance(value, np.integer):
        return int(value)

    if isinstance(value, np.floating):
        return float(value)

    if isinstance(value, np.bool_):
        return bool(value)

    if isinstance(value, np.ndarray):
        return value.tolist()

    raise TypeError("Object of type " + type(value).__name__
                    + " is not JSON serializable")


def screen_rng(seed, index):
    """ Independent random generator for one screen of a corpus. The
    stream depends only on (seed, index) so shards can be generated in
    any order or in parallel. """

    return np.random.default_rng(np.random.SeedSequence([int(seed),
                                                         int(index)]))

