from __future__ import print_function, division, absolute_import

import os
import sys
import argparse
import warnings

from loguru import logger

from .exceptions import (SchemaError, ScreenValidationError, ConfigError,
                         IdMismatch, SetMismatch, InfeasibleSpec)
from .config import heuristic_config, training_config
from .input.ui_types import detector_types
from .input.screen import screen
from .input.loading import load_screens, load_ocr
from .structure.tree import load_trees
from .semantics.clickability import clickability_model, train_clickability
from .catalogue.process_catalogue import process_catalogue
from .evaluation.report import evaluate, write_evaluation, write_gap_report
from .evaluation.tuning import tune_thresholds
from .evaluation.matching import match_spec
from .evaluation.gap_analysis import gap_analysis
from .synthgen.gen_spec import gen_spec
from .synthgen.corpus import generate_corpus, write_corpus, sample_icons
from . import utils


""" Exit codes. """

exit_ok = 0
exit_schema = 2
exit_io = 3
exit_id_mismatch = 4


def _load_config(args, **flags):
    """ Heuristic config from --config and --set. flags maps config
    fields to command line values, applied last when not None. """

    if args.config is not None:
        config = heuristic_config.from_file(args.config)

    else:
        config = heuristic_config()

    if args.set:
        config.set_from_strings(args.set)

    given = dict((k, v) for k, v in flags.items() if v is not None)
    if given:
        config.update(given)

    config.check()

    return config


def _load(path, allow_derived=False):
    screens, failures = load_screens(path, allow_derived=allow_derived)

    if failures:
        logger.warning("{} screens in {} failed validation and were "
                       "skipped.", len(failures), path)

    return screens


def _with_raster_dir(screens, raster_dir):
    """ Point screens without a raster at raster_dir/<screen_id>.png. """

    out = []
    for s in screens:
        path = os.path.join(raster_dir, s.screen_id + ".png")
        if not s.has_raster and os.path.exists(path):
            s = screen(s.screen_id, s.width_px, s.height_px, s.elements,
                       raster_path=path)

        out.append(s)

    return out


def cmd_process(args):
    config = _load_config(args)
    screens = _load(args.detections)

    if args.raster_dir is not None:
        screens = _with_raster_dir(screens, args.raster_dir)

    ocr = load_ocr(args.ocr) if args.ocr is not None else None
    model = clickability_model.load(args.model) if args.model else None

    cat = process_catalogue(screens, config, ocr=ocr, model=model,
                            out_dir=args.out_dir, run=args.run,
                            make_plots=args.plots)

    cat.process(n_jobs=args.jobs)
    cat.write(fmt=args.format)

    return exit_ok


def cmd_evaluate(args):
    config = _load_config(args, match_iou=args.iou)
    preds = _load(args.predictions, allow_derived=True)
    truths = _load(args.ground_truth, allow_derived=True)

    produced_trees = truth_trees = None
    if args.pred_trees is not None and args.truth_trees is not None:
        produced_trees = load_trees(args.pred_trees)
        truth_trees = load_trees(args.truth_trees)

    report = evaluate(preds, truths, produced_trees=produced_trees,
                      truth_trees=truth_trees,
                      iou_threshold=config.match_iou)

    write_evaluation(report, args.out_dir, fmt=args.format)

    if args.plots:
        from .plotting.plot_evaluation import plot_pr_curves

        for criterion in report["ap"]:
            plot_pr_curves(report, criterion=criterion, save=os.path.join(
                args.out_dir, "plots", "pr_curves_" + criterion + ".pdf"))

    return exit_ok


def cmd_tune(args):
    config = _load_config(args)
    preds = _load(args.predictions)
    truths = _load(args.ground_truth)

    thresholds, scores = tune_thresholds(
        preds, truths, beta=args.beta,
        spec=match_spec(iou_threshold=config.match_iou))
    thresholds = dict((t, v) for t, v in thresholds.items()
                      if t in detector_types)

    utils.make_dirs(args.out_dir)
    path = os.path.join(args.out_dir, "tuned_config.json")
    utils.write_json(path, {"per_class_conf_threshold": thresholds})

    for ui_type in sorted(thresholds):
        logger.info("{}: threshold {:.3f}, F{:g} {:.3f}", ui_type,
                    thresholds[ui_type], args.beta, scores[ui_type])

    logger.info("Thresholds written to {}.", path)

    return exit_ok


def cmd_gap(args):
    config = _load_config(args)
    annotations = _load(args.annotations, allow_derived=True)
    exposed = _load(args.exposed, allow_derived=True)

    gap = gap_analysis(annotations, exposed, config)
    write_gap_report(gap, args.out_dir)

    if args.plots:
        from .plotting.plot_evaluation import (plot_gap_histogram,
                                               plot_unmatched_types)

        plots = os.path.join(args.out_dir, "plots")
        plot_gap_histogram(gap, save=os.path.join(plots,
                                                  "gap_histogram.pdf"))
        plot_unmatched_types(gap, save=os.path.join(plots,
                                                    "gap_unmatched.pdf"))

    return exit_ok


def cmd_synth(args):
    _load_config(args)

    if args.spec is not None:
        spec = gen_spec.from_file(args.spec)

    elif args.noiseless:
        spec = gen_spec.noiseless(seed=args.seed, n_screens=args.n_screens)

    else:
        spec = gen_spec(seed=args.seed, n_screens=args.n_screens)

    corpus = generate_corpus(spec)
    write_corpus(corpus, args.out_dir, spec=spec, rasters=not args.no_rasters)

    return exit_ok


def cmd_train_clickability(args):
    config = _load_config(args,
                          clickability_target_precision=args.target_precision)

    if args.corpus is not None:
        truths = _load(os.path.join(args.corpus, "truth.json"))
        icons = [e for s in truths for e in s.elements
                 if e.ui_type == "Icon" and e.clickable_annotated is not None]
        labels = [e.clickable_annotated for e in icons]

    else:
        icons, labels = sample_icons(args.n_icons, seed=args.seed)

    settings = training_config(seed=args.seed)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        model = train_clickability(
            icons, labels,
            target_precision=config.clickability_target_precision,
            settings=settings, min_recall=config.clickability_min_recall)

    for w in caught:
        logger.warning(str(w.message))

    utils.make_dirs(args.out_dir)
    path = args.model or os.path.join(args.out_dir, "clickability.json")
    model.save(path)

    logger.info("Clickability model written to {}.", path)

    return exit_ok


def build_parser():
    parser = argparse.ArgumentParser(
        prog="screenpipes",
        description="Turn UI element detections into accessibility "
                    "trees, and evaluate them.")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default=".",
                        help="directory outputs are written under")
    common.add_argument("--format", choices=["json", "csv"], default="json",
                        help="also write tables as CSV with csv")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes")
    common.add_argument("--config", default=None,
                        help="JSON file of heuristic settings")
    common.add_argument("--set", action="append", default=[],
                        metavar="NAME=VALUE",
                        help="override one setting, may be repeated")
    common.add_argument("--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("process", parents=[common],
                       help="build accessibility trees from detections")
    p.add_argument("detections")
    p.add_argument("--raster-dir", default=None)
    p.add_argument("--ocr", default=None)
    p.add_argument("--model", default=None,
                   help="clickability model file")
    p.add_argument("--run", default=".")
    p.add_argument("--plots", action="store_true")
    p.set_defaults(func=cmd_process)

    p = sub.add_parser("evaluate", parents=[common],
                       help="score detections and trees against truth")
    p.add_argument("predictions")
    p.add_argument("ground_truth")
    p.add_argument("--pred-trees", default=None)
    p.add_argument("--truth-trees", default=None)
    p.add_argument("--iou", type=float, default=None,
                   help="matching IoU, match_iou from the config by default")
    p.add_argument("--plots", action="store_true")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("tune", parents=[common],
                       help="choose per-class confidence thresholds")
    p.add_argument("predictions")
    p.add_argument("ground_truth")
    p.add_argument("--beta", type=float, default=1.)
    p.set_defaults(func=cmd_tune)

    p = sub.add_parser("gap", parents=[common],
                       help="compare annotations with exposed elements")
    p.add_argument("annotations")
    p.add_argument("exposed")
    p.add_argument("--plots", action="store_true")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("synth", parents=[common],
                       help="generate a synthetic corpus")
    p.add_argument("--spec", default=None,
                   help="JSON file of corpus settings")
    p.add_argument("--n-screens", type=int, default=100)
    p.add_argument("--noiseless", action="store_true")
    p.add_argument("--no-rasters", action="store_true")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("train-clickability", parents=[common],
                       help="train the icon clickability model")
    p.add_argument("--corpus", default=None,
                   help="synthetic corpus directory to take icons from")
    p.add_argument("--n-icons", type=int, default=5000)
    p.add_argument("--target-precision", type=float, default=None,
                   help="clickability_target_precision from the config by "
                        "default")
    p.add_argument("--model", default=None, help="output file")
    p.set_defaults(func=cmd_train_clickability)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    logger.enable("screenpipes")
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if args.verbose else "INFO",
               format="{time:HH:mm:ss} | {level: <7} | {message}")

    try:
        return args.func(args)

    except (IdMismatch, SetMismatch) as err:
        logger.error(str(err))
        return exit_id_mismatch

    except (SchemaError, ScreenValidationError, ConfigError,
            InfeasibleSpec) as err:
        logger.error(str(err))
        return exit_schema

    except (IOError, OSError) as err:
        logger.error(str(err))
        return exit_io


if __name__ == "__main__":
    sys.exit(main())
