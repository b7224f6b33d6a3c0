from __future__ import print_function, division, absolute_import

import numpy as np
import pytest

from screenpipes.geometry import bbox
from screenpipes.exceptions import MissingRaster, UnachievablePrecisionWarning
from screenpipes.semantics import (extract_tint, find_outlier,
                                   select_tab_state, select_segmented_state,
                                   sc_rows, boosted_trees, train_clickability,
                                   calibrate_threshold, clickability_model,
                                   score_clickability, apply_semantics)
from screenpipes.config import training_config
from screenpipes.catalogue import process_screen
from screenpipes.evaluation import selection_metrics
from screenpipes.synthgen import gen_spec, generate_corpus, sample_icons


white = (250, 250, 250)
gray = (120, 120, 120)
blue = (20, 90, 230)


def striped_raster(width=100, height=100):
    raster = np.zeros((height, width, 4), dtype=np.uint8)
    raster[..., :3] = white
    raster[..., 3] = 255
    return raster


def fill(raster, box, color):
    h, w = raster.shape[:2]
    raster[int(round(box.top*h)):int(round(box.bottom*h)),
           int(round(box.left*w)):int(round(box.right*w)), :3] = color


def test_extract_tint_ranks_colours():
    raster = striped_raster()
    box = bbox(0., 0., 0.5, 0.5)
    fill(raster, bbox(0., 0., 0.5, 0.1), blue)

    profile = extract_tint(raster, box)

    assert profile.background_color == tuple(c >> 3 for c in white)
    assert profile.tint_color == tuple(c >> 3 for c in blue)
    assert profile.tint_weight == pytest.approx(0.2)


def test_monochrome_crop_has_zero_tint_weight():
    profile = extract_tint(striped_raster(), bbox(0.1, 0.1, 0.4, 0.4))

    assert profile.tint_color == profile.background_color
    assert profile.tint_weight == 0.


def test_extract_tint_needs_a_raster():
    with pytest.raises(MissingRaster):
        extract_tint(None, bbox(0.1, 0.1, 0.2, 0.2))


def test_find_outlier():
    assert find_outlier([(1, 1, 1), (1, 1, 1), (20, 2, 2)]) == 2
    assert find_outlier([(1, 1, 1), (1, 1, 1), (1, 1, 1)]) is None
    assert find_outlier([(1, 1, 1), (20, 2, 2)]) is None


def tab_boxes(n):
    return [bbox(i/float(n), 0.9, (i + 1)/float(n), 1.) for i in range(n)]


def test_tab_state_finds_the_tinted_tab():
    raster = striped_raster()
    boxes = tab_boxes(4)
    for i, box in enumerate(boxes):
        fill(raster, bbox(box.left + 0.05, 0.92, box.right - 0.05, 0.98),
             blue if i == 2 else gray)

    assert select_tab_state(boxes, raster) == [False, False, True, False]


def test_tab_state_is_unknown_without_contrast_or_raster():
    raster = striped_raster()
    boxes = tab_boxes(3)
    for box in boxes:
        fill(raster, bbox(box.left + 0.05, 0.92, box.right - 0.05, 0.98),
             gray)

    assert select_tab_state(boxes, raster) == [None]*3
    assert select_tab_state(boxes, None) == [None]*3


def test_segment_text_rule_without_raster(el):
    row = [el("a", (0.05, 0.2, 0.3, 0.25), "SegmentedControl"),
           el("b", (0.35, 0.2, 0.6, 0.25), "SegmentedControl", text="On"),
           el("c", (0.65, 0.2, 0.9, 0.25), "SegmentedControl")]

    assert select_segmented_state(row, None) == [False, True, False]


def test_segment_underline_rule_on_two_segments(el):
    raster = striped_raster()
    row = [el("a", (0.05, 0.2, 0.45, 0.4), "SegmentedControl", text="A"),
           el("b", (0.55, 0.2, 0.95, 0.4), "SegmentedControl", text="B")]

    fill(raster, bbox(0.55, 0.37, 0.95, 0.4), blue)

    assert select_segmented_state(row, raster) == [False, True]


def test_sc_rows_split_by_vertical_overlap(el, config):
    elements = [el("r2", (0.1, 0.5, 0.4, 0.55), "SegmentedControl"),
                el("r1b", (0.5, 0.2, 0.9, 0.25), "SegmentedControl"),
                el("r1a", (0.1, 0.21, 0.4, 0.26), "SegmentedControl"),
                el("text", (0.1, 0.2, 0.4, 0.25))]

    rows = sc_rows(elements, config)

    assert [[e.id for e in row] for row in rows] == [["r1a", "r1b"], ["r2"]]


def test_apply_semantics_sets_intrinsic_state_and_clickability(el, config,
                                                               make_screen):
    s = make_screen([el("cb", (0.1, 0.1, 0.15, 0.13), "CheckboxSelected"),
                     el("tg", (0.1, 0.2, 0.2, 0.23), "ToggleUnselected"),
                     el("tx", (0.3, 0.2, 0.6, 0.23), text="Wi-Fi"),
                     el("ic", (0.3, 0.5, 0.35, 0.53), "Icon",
                        icon_class="back")])

    out = dict((e.id, e) for e in apply_semantics(s, config).elements)

    assert out["cb"].selected is True and out["cb"].clickable is True
    assert out["tg"].selected is False
    assert out["tx"].clickable is None
    assert out["ic"].clickable is None


def processed(corpus, config):
    produced = [process_screen(item.detections, config)[0]
                for item in corpus]
    return produced, [item.tree for item in corpus]


def test_rendered_selection_states_are_recovered(clean_corpus, config):
    produced, truth = processed(clean_corpus, config)
    metrics = selection_metrics(produced, truth)

    assert metrics["tab_screens"] > 0
    assert metrics["sc_screens"] > 0
    assert metrics["tab_state_accuracy"] == 1.
    assert metrics["sc_state_accuracy"] == 1.


def test_low_contrast_tabs_are_left_unknown(config):
    spec = gen_spec.noiseless(seed=3, n_screens=10,
                              template_mix={"tab_bar": 1.},
                              noise={"low_contrast_prob": 1.})
    corpus = generate_corpus(spec, render=True)

    for item in corpus:
        tree = process_screen(item.detections, config)[0]
        tabs = [g for g in tree.groups() if g.kind == "TabButton"]

        assert tabs
        assert all(g.selected is None for g in tabs)


def test_boosted_trees_learn_a_threshold_rule():
    rng = np.random.default_rng(0)
    X = rng.uniform(size=(400, 2))
    y = X[:, 0] > 0.6

    model = boosted_trees.fit(X, y, n_trees=30, max_depth=2)
    p = model.predict_proba(X)

    assert np.mean((p >= 0.5) == y) > 0.95

    copy = boosted_trees.from_dict(model.to_dict())
    assert np.allclose(copy.predict_proba(X), p)


def sweep(scores, labels, target, min_recall):
    """ Smallest threshold among the scores reaching both targets. """
    best = None
    for t in sorted(set(scores)):
        predicted = scores >= t
        tp = np.sum(predicted & labels)
        precision = tp/float(np.sum(predicted))
        recall = tp/float(np.sum(labels))
        if precision >= target and recall >= min_recall:
            best = t if best is None else min(best, t)
    return best


@pytest.mark.parametrize("seed", range(5))
def test_calibrated_threshold_matches_exhaustive_sweep(seed):
    rng = np.random.default_rng(seed)
    labels = rng.random(200) < 0.4
    scores = np.round(np.clip(labels*0.3 + rng.uniform(size=200), 0., 1.), 2)

    threshold, precision, recall, achieved = calibrate_threshold(
        scores, labels, 0.8, min_recall=0.05)

    expected = sweep(scores, labels, 0.8, 0.05)

    assert achieved == (expected is not None)
    if achieved:
        assert threshold == expected
        assert precision >= 0.8


def test_recall_floor_is_off_by_default():
    scores = np.linspace(1., 0.01, 100)
    labels = np.zeros(100, dtype=bool)
    labels[0] = True
    labels[3::2] = True

    # Only the top score reaches the target, at a recall of 1/50.
    threshold, precision, recall, achieved = calibrate_threshold(
        scores, labels, 0.9)

    assert achieved
    assert threshold == 1.
    assert precision == 1.
    assert recall == pytest.approx(0.02)

    _, _, _, achieved = calibrate_threshold(scores, labels, 0.9,
                                            min_recall=0.05)
    assert not achieved


def test_unreachable_precision_falls_back():
    scores = np.array([0.9, 0.8, 0.7])
    labels = np.array([False, True, False])

    threshold, precision, _, achieved = calibrate_threshold(scores, labels,
                                                            0.99)

    assert not achieved
    assert threshold == 0.8
    assert precision == pytest.approx(0.5)


@pytest.fixture(scope="module")
def icon_model():
    icons, labels = sample_icons(5000, seed=1)
    return train_clickability(icons, labels, target_precision=0.9,
                              settings=training_config(seed=0))


def test_clickability_keeps_precision_on_fresh_icons(icon_model):
    icons, labels = sample_icons(2000, seed=2)
    labels = np.array(labels)
    predicted = icon_model.predict(icons)

    assert icon_model.validation["achieved"]
    assert np.sum(predicted) > 0
    assert np.mean(labels[predicted]) >= 0.85


def test_clickability_model_saves_and_loads(icon_model, tmp_path):
    path = str(tmp_path / "model.json")
    icon_model.save(path)
    loaded = clickability_model.load(path)

    icons, _ = sample_icons(50, seed=4)
    assert np.allclose(loaded.predict_proba(icons),
                       icon_model.predict_proba(icons))
    assert loaded.threshold == icon_model.threshold


def test_score_clickability_uses_model_only_for_icons(icon_model, el):
    icon = el("i", (0.05, 0.06, 0.12, 0.09), "Icon", icon_class="back")

    assert score_clickability(icon_model, icon) in (True, False)
    assert score_clickability(None, icon) is None
    assert score_clickability(icon_model,
                              el("f", (0.1, 0.2, 0.9, 0.25),
                                 "TextField")) is True
    assert score_clickability(icon_model, el("p", (0.1, 0.2, 0.9, 0.5),
                                             "Picture")) is None


def test_single_class_training_set_is_rejected(el):
    icons = [el(str(i), (0.1, 0.1, 0.2, 0.2), "Icon") for i in range(10)]

    with pytest.raises(ValueError):
        train_clickability(icons, [True]*10)


def test_impossible_target_warns():
    icons, labels = sample_icons(300, seed=5)

    with pytest.warns(UnachievablePrecisionWarning):
        train_clickability(icons, labels, target_precision=1.01,
                           settings=training_config(n_trees=5))
