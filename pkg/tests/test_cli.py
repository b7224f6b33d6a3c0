from __future__ import print_function, division, absolute_import

import json
import pytest

from screenpipes.cli import main, exit_ok, exit_schema, exit_io, \
    exit_id_mismatch
from screenpipes.semantics import clickability_model


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpus")
    assert main(["synth", "--noiseless", "--n-screens", "6", "--seed", "3",
                 "--out-dir", str(out)]) == exit_ok
    return out


def test_synth_writes_a_corpus(corpus_dir):
    for name in ["truth.json", "detections.json", "truth_trees.json",
                 "ocr.json", "manifest.json"]:
        assert (corpus_dir / name).exists()

    assert len(list((corpus_dir / "rasters").glob("*.png"))) == 6


def test_synth_is_deterministic(tmp_path):
    for name in ["a", "b"]:
        assert main(["synth", "--n-screens", "4", "--seed", "8",
                     "--no-rasters", "--out-dir", str(tmp_path / name)]) == 0

    assert ((tmp_path / "a" / "detections.json").read_bytes()
            == (tmp_path / "b" / "detections.json").read_bytes())


def test_process_then_evaluate(corpus_dir, tmp_path):
    out = tmp_path / "run"

    assert main(["process", str(corpus_dir / "detections.json"),
                 "--ocr", str(corpus_dir / "ocr.json"),
                 "--out-dir", str(out)]) == exit_ok

    trees = out / "trees" / "trees.json"
    assert trees.exists()

    assert main(["evaluate", str(corpus_dir / "detections.json"),
                 str(corpus_dir / "truth.json"),
                 "--pred-trees", str(trees),
                 "--truth-trees", str(corpus_dir / "truth_trees.json"),
                 "--out-dir", str(out)]) == exit_ok

    report = json.loads((out / "reports" / "evaluation.json").read_text())

    assert report["ap"]["iou_over_half"]["mean_ap"] == pytest.approx(1.)
    assert report["ordering"]["perfect"] == 1.


def test_tune_writes_thresholds(corpus_dir, tmp_path):
    assert main(["tune", str(corpus_dir / "detections.json"),
                 str(corpus_dir / "truth.json"),
                 "--out-dir", str(tmp_path)]) == exit_ok

    tuned = json.loads((tmp_path / "tuned_config.json").read_text())
    assert tuned["per_class_conf_threshold"]["Text"] == 1.

    assert main(["process", str(corpus_dir / "detections.json"),
                 "--config", str(tmp_path / "tuned_config.json"),
                 "--out-dir", str(tmp_path / "tuned")]) == exit_ok


def test_gap_report(corpus_dir, tmp_path):
    assert main(["gap", str(corpus_dir / "truth.json"),
                 str(corpus_dir / "detections.json"),
                 "--out-dir", str(tmp_path)]) == exit_ok

    assert (tmp_path / "reports" / "gap_analysis.json").exists()
    assert (tmp_path / "reports" / "gap_per_screen.csv").exists()


def test_train_clickability(tmp_path):
    model = tmp_path / "model.json"

    assert main(["train-clickability", "--n-icons", "1500",
                 "--model", str(model), "--out-dir", str(tmp_path)]) == 0

    loaded = clickability_model.load(str(model))
    assert 0. <= loaded.threshold <= 1.


def test_empty_input_is_fine(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("[]")

    assert main(["process", str(empty), "--out-dir",
                 str(tmp_path / "out")]) == exit_ok


def test_malformed_input_exits_2(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("[{")

    assert main(["process", str(broken), "--out-dir", str(tmp_path)]) == \
        exit_schema


def test_bad_override_exits_2(corpus_dir, tmp_path):
    assert main(["process", str(corpus_dir / "detections.json"),
                 "--set", "nms_iou=2", "--out-dir", str(tmp_path)]) == \
        exit_schema


def test_missing_file_exits_3(tmp_path):
    assert main(["process", str(tmp_path / "nope.json"),
                 "--out-dir", str(tmp_path)]) == exit_io


def test_screen_mismatch_exits_4(corpus_dir, tmp_path):
    other = tmp_path / "other.json"
    other.write_text(json.dumps([{"screen_id": "elsewhere", "width_px": 390,
                                  "height_px": 844, "elements": []}]))

    assert main(["evaluate", str(other), str(corpus_dir / "truth.json"),
                 "--out-dir", str(tmp_path)]) == exit_id_mismatch


def single_box_files(tmp_path):
    def record(right, confidence):
        return [{"screen_id": "one", "width_px": 390, "height_px": 844,
                 "elements": [{"id": "a", "type": "Text",
                               "confidence": confidence,
                               "box": {"l": .1, "t": .1, "r": right,
                                       "b": .2}}]}]

    truth = tmp_path / "truth.json"
    truth.write_text(json.dumps(record(.5, 1.)))

    # IoU with the truth box is 0.875.
    preds = tmp_path / "preds.json"
    preds.write_text(json.dumps(record(.45, .9)))

    return preds, truth


def test_evaluate_reads_match_iou_from_the_config(tmp_path):
    preds, truth = single_box_files(tmp_path)

    assert main(["evaluate", str(preds), str(truth),
                 "--out-dir", str(tmp_path / "default")]) == exit_ok

    report = json.loads((tmp_path / "default" / "reports"
                         / "evaluation.json").read_text())
    assert report["ap"]["iou_over_half"]["mean_ap"] == pytest.approx(1.)

    strict = tmp_path / "strict.json"
    strict.write_text(json.dumps({"match_iou": 0.95}))

    assert main(["evaluate", str(preds), str(truth), "--config", str(strict),
                 "--out-dir", str(tmp_path / "strict")]) == exit_ok

    report = json.loads((tmp_path / "strict" / "reports"
                         / "evaluation.json").read_text())
    assert report["ap"]["iou_over_half"]["mean_ap"] == 0.

    # The flag wins over the config file.
    assert main(["evaluate", str(preds), str(truth), "--config", str(strict),
                 "--iou", "0.5",
                 "--out-dir", str(tmp_path / "flag")]) == exit_ok

    report = json.loads((tmp_path / "flag" / "reports"
                         / "evaluation.json").read_text())
    assert report["ap"]["iou_over_half"]["mean_ap"] == pytest.approx(1.)


@pytest.mark.parametrize("argv", [
    ["evaluate", "PREDS", "TRUTH", "--set", "match_iou=7"],
    ["evaluate", "PREDS", "TRUTH", "--iou", "1.5"],
    ["tune", "PREDS", "TRUTH", "--set", "match_iou=-1"],
    ["gap", "TRUTH", "PREDS", "--set", "nonsense=1"],
    ["synth", "--n-screens", "1", "--set", "nms_iou=2"],
    ["train-clickability", "--n-icons", "50",
     "--set", "clickability_target_precision=1.5"],
    ["train-clickability", "--n-icons", "50", "--target-precision", "2"],
])
def test_every_command_rejects_a_bad_config(tmp_path, argv):
    preds, truth = single_box_files(tmp_path)
    argv = [str(preds) if a == "PREDS" else str(truth) if a == "TRUTH" else a
            for a in argv]

    assert main(argv + ["--out-dir", str(tmp_path / "out")]) == exit_schema


def test_process_output_is_byte_identical(corpus_dir, tmp_path):
    for name in ["a", "b"]:
        assert main(["process", str(corpus_dir / "detections.json"),
                     "--ocr", str(corpus_dir / "ocr.json"), "--format", "csv",
                     "--out-dir", str(tmp_path / name)]) == exit_ok

    written = sorted(p.relative_to(tmp_path / "a")
                     for p in (tmp_path / "a").rglob("*") if p.is_file())

    assert len(written) >= 5
    for rel in written:
        assert ((tmp_path / "a" / rel).read_bytes()
                == (tmp_path / "b" / rel).read_bytes()), str(rel)
