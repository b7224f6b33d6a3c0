from __future__ import print_function, division, absolute_import

import os
import numpy as np
import pandas as pd

from concurrent.futures import ProcessPoolExecutor
from astropy.table import Table
from loguru import logger

from ..exceptions import MissingRaster, EmptyCrop
from ..refinement.refine_screen import refine_screen, stage_record
from ..semantics.apply_semantics import apply_semantics
from ..structure.build_tree import build_tree
from ..structure.tree import save_trees
from .. import utils


stages = ["filter", "nms", "dedup", "repair", "ocr", "semantics"]

# Per-screen failures that do not stop a batch.
soft_errors = (ValueError, MissingRaster, EmptyCrop)


def process_screen(screen, config, ocr_boxes=None, model=None):
    """ Run refinement, semantics and structure on one screen.

    Returns the accessibility tree, the refined screen and the list of
    per-stage element counts.
    """

    refined, diagnostics = refine_screen(screen, config, ocr_boxes=ocr_boxes)

    annotated = apply_semantics(refined, config, model=model)
    diagnostics.append(stage_record("semantics", refined.elements,
                                    annotated.elements))

    return build_tree(annotated, config), annotated, diagnostics


def _process_job(job):
    screen, config, ocr_boxes, model = job

    try:
        tree, _, diagnostics = process_screen(screen, config,
                                              ocr_boxes=ocr_boxes,
                                              model=model)
        return tree, diagnostics, None

    except soft_errors as err:
        return None, [], type(err).__name__ + ": " + str(err)


class process_catalogue(object):
    """ Process a set of screens into accessibility trees.

    Parameters
    ----------

    screens : list
        screenpipes.input.screen objects of raw detections.

    config : screenpipes.config.heuristic_config
        Thresholds for every stage.

    ocr : dict - optional
        (bbox, text) OCR observations keyed by screen id.

    model : screenpipes.semantics.clickability_model - optional
        Icon clickability model. Without it icon clickability is unset.

    out_dir : str - optional
        Directory outputs are written under.

    run : str - optional
        Subfolder of trees/, reports/ and plots/ for this run, useful
        e.g. to process the same screens with several configurations.

    make_plots : bool - optional
        Whether to draw every screen with its tree.
    """

    def __init__(self, screens, config, ocr=None, model=None, out_dir=".",
                 run=".", make_plots=False):

        self.screens = list(screens)
        self.config = config
        self.ocr = ocr or {}
        self.model = model
        self.out_dir = out_dir
        self.run = run
        self.make_plots = make_plots

        self.n_screens = len(self.screens)
        self.trees = [None]*self.n_screens
        self.diagnostics = [[] for _ in range(self.n_screens)]
        self.errors = [None]*self.n_screens
        self.cat = None

    def process(self, n_jobs=1):
        """ Process every screen. Results keep input order whatever the
        number of workers.

        Parameters
        ----------

        n_jobs : int - optional
            Worker processes. 1 runs in this process.
        """

        jobs = [(s, self.config, self.ocr.get(s.screen_id), self.model)
                for s in self.screens]

        if n_jobs > 1 and self.n_screens > 1:
            with ProcessPoolExecutor(max_workers=n_jobs) as pool:
                results = list(pool.map(_process_job, jobs,
                                        chunksize=max(1, self.n_screens
                                                      // (4*n_jobs))))

        else:
            results = [_process_job(job) for job in jobs]

        for i, (tree, diagnostics, error) in enumerate(results):
            self.trees[i] = tree
            self.diagnostics[i] = diagnostics
            self.errors[i] = error

            if error is not None:
                logger.warning("Screen {} skipped: {}",
                               self.screens[i].screen_id, error)

        self._make_catalogue()

        n_done = sum(1 for t in self.trees if t is not None)
        logger.info("{} screens processed, {} skipped.", n_done,
                    self.n_screens - n_done)

        return [t for t in self.trees if t is not None]

    def _make_catalogue(self):
        """ One row per screen: status, element counts after each stage
        and the size of the tree. """

        rows = []
        for screen, tree, diagnostics, error in zip(self.screens,
                                                    self.trees,
                                                    self.diagnostics,
                                                    self.errors):

            row = {"screen_id": screen.screen_id,
                   "status": "ok" if error is None else "skipped",
                   "n_detections": len(screen.elements)}

            counts = dict((d["stage"], d["out"]) for d in diagnostics)
            for stage in stages:
                row["n_after_" + stage] = counts.get(stage, -1)

            row["n_groups"] = len(tree.groups()) if tree is not None else -1
            row["n_navigable"] = tree.n_navigable if tree is not None else -1
            row["error"] = error or ""
            rows.append(row)

        columns = (["screen_id", "status", "n_detections"]
                   + ["n_after_" + s for s in stages]
                   + ["n_groups", "n_navigable", "error"])

        self.cat = pd.DataFrame(rows, columns=columns)

    def write(self, fmt="json"):
        """ Write trees, per-stage diagnostics and the catalogue.

        Trees go to trees/<run>/trees.json and diagnostics to
        reports/<run>/diagnostics.json, with per-stage element totals in
        reports/<run>/stage_totals.csv. The catalogue is written as a
        fixed-width text table and, with fmt "csv", as CSV too.
        """

        utils.make_dirs(self.out_dir, run=self.run)

        tree_dir = os.path.join(self.out_dir, "trees", self.run)
        report_dir = os.path.join(self.out_dir, "reports", self.run)

        save_trees(os.path.join(tree_dir, "trees.json"),
                   [t for t in self.trees if t is not None])

        utils.write_json(os.path.join(report_dir, "diagnostics.json"),
                         [{"screen_id": s.screen_id, "stages": d,
                           "error": e}
                          for s, d, e in zip(self.screens, self.diagnostics,
                                             self.errors)])

        if self.cat is None:
            self._make_catalogue()

        if len(self.cat):
            Table.from_pandas(self.cat).write(
                os.path.join(report_dir, "catalogue.txt"),
                format="ascii.fixed_width", overwrite=True)

        if fmt == "csv":
            self.cat.to_csv(os.path.join(report_dir, "catalogue.csv"),
                            index=False)

        self.stage_totals().to_csv(os.path.join(report_dir,
                                                "stage_totals.csv"))

        if self.make_plots:
            self.plot()

    def plot(self):
        from ..plotting.plot_screen import plot_screen

        plot_dir = os.path.join(self.out_dir, "plots", self.run)

        for screen, tree in zip(self.screens, self.trees):
            if tree is None:
                continue

            plot_screen(screen, tree, show=False,
                        save=os.path.join(plot_dir,
                                          screen.screen_id + ".pdf"))

    def stage_totals(self):
        """ Elements in, out, removed and added per stage summed over the
        processed screens, as a pandas DataFrame. """

        records = [d for diagnostics in self.diagnostics for d in diagnostics]
        if not records:
            return pd.DataFrame(columns=["in", "out", "removed", "added"])

        frame = pd.DataFrame(records)
        totals = frame.groupby("stage", sort=False)[["in", "out", "removed",
                                                     "added"]].sum()

        return totals.astype(np.int64)
