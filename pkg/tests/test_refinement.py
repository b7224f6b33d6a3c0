from __future__ import print_function, division, absolute_import

import itertools
import numpy as np
import pytest

from screenpipes.geometry import bbox, iou
from screenpipes.input.screen import detected_element
from screenpipes.refinement import (filter_by_confidence, nms_within_class,
                                    dedup_cross_class,
                                    repair_segmented_controls, merge_ocr,
                                    refine_screen)
from screenpipes.synthgen import gen_spec, generate_corpus


def random_detections(rng, n, types=("Text", "Icon")):
    out = []
    for i in range(n):
        x, y = rng.uniform(0., 0.3, 2)
        w, h = rng.uniform(0.1, 0.3, 2)
        out.append(detected_element("d" + str(i), bbox(x, y, x + w, y + h),
                                    types[int(rng.integers(len(types)))],
                                    confidence=float(rng.uniform())))
    return out


def nms_oracle(elements, threshold):
    """ The unique subset where no pair of the same type overlaps at the
    threshold and every dropped element is covered by a more confident
    kept one of its type. """

    n = len(elements)
    for size in range(n, -1, -1):
        for keep in itertools.combinations(range(n), size):
            keep = set(keep)
            ok = True
            for i in range(n):
                higher = [k for k in keep if k != i
                          and elements[k].ui_type == elements[i].ui_type
                          and elements[k].confidence > elements[i].confidence
                          and iou(elements[k].box, elements[i].box)
                          >= threshold]

                if (i in keep) == bool(higher):
                    ok = False
                    break

            if ok:
                return keep


@pytest.mark.parametrize("seed", range(8))
def test_nms_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    elements = random_detections(rng, 7)

    kept = nms_within_class(elements, 0.5)
    expected = nms_oracle(elements, 0.5)

    assert set(e.id for e in kept) == set(elements[i].id for i in expected)


def test_nms_keeps_order_and_separates_classes(el):
    elements = [el("low", (0.1, 0.1, 0.3, 0.3), confidence=0.4),
                el("icon", (0.1, 0.1, 0.3, 0.3), "Icon", confidence=0.2),
                el("high", (0.11, 0.1, 0.3, 0.3), confidence=0.9)]

    assert [e.id for e in nms_within_class(elements)] == ["icon", "high"]


def test_nms_rejects_bad_threshold(el):
    with pytest.raises(ValueError):
        nms_within_class([el("a", (0.1, 0.1, 0.2, 0.2))], 0.)


def test_dedup_removes_similar_types_but_keeps_nested(el, config):
    elements = [el("pic", (0.1, 0.1, 0.5, 0.3), "Picture", confidence=0.9),
                el("icon-dup", (0.1, 0.1, 0.5, 0.29), "Icon",
                   confidence=0.6),
                el("icon-on-pic", (0.4, 0.12, 0.45, 0.15), "Icon",
                   confidence=0.8),
                el("text", (0.1, 0.1, 0.5, 0.3), confidence=0.5)]

    kept = [e.id for e in dedup_cross_class(elements, config)]

    assert kept == ["pic", "icon-on-pic", "text"]


def keep_set_oracle(elements, suppresses):
    """ Try every subset, largest first, for the one where an element is
    kept exactly when no kept element ranked above it suppresses it.
    Rank is decreasing confidence, ties in input order. """

    rank = dict((i, r) for r, i in enumerate(
        sorted(range(len(elements)), key=lambda i: -elements[i].confidence)))

    n = len(elements)
    for size in range(n, -1, -1):
        for keep in itertools.combinations(range(n), size):
            keep = set(keep)
            if all((i in keep) != any(rank[k] < rank[i]
                                      and suppresses(elements[k],
                                                     elements[i])
                                      for k in keep if k != i)
                   for i in range(n)):
                return keep


def overlap_clusters(elements, related):
    """ Index sets of elements joined, directly or not, by related
    pairs that overlap at all. """

    clusters = [set([i]) for i in range(len(elements))]
    for i, j in itertools.combinations(range(len(elements)), 2):
        if related(elements[i], elements[j]) and \
                iou(elements[i].box, elements[j].box) > 0.:
            a = next(c for c in clusters if i in c)
            b = next(c for c in clusters if j in c)
            if a is not b:
                a |= b
                clusters.remove(b)

    return clusters


@pytest.fixture(scope="module")
def large_noisy_corpus():
    return generate_corpus(gen_spec(seed=17, n_screens=1000))


def test_dedup_on_noisy_screens_matches_brute_force(large_noisy_corpus,
                                                    config):
    group_of = dict((t, n) for n, group in enumerate(config.dedup_groups)
                    for t in group)

    def related(a, b):
        return (a.ui_type in group_of
                and group_of[a.ui_type] == group_of.get(b.ui_type))

    def suppresses(kept, candidate):
        return related(kept, candidate) and \
            iou(kept.box, candidate.box) > config.dedup_iou

    checked = removed = 0
    for item in large_noisy_corpus:
        elements = item.detections.elements
        survivors = dedup_cross_class(elements, config)
        kept_ids = set(e.id for e in survivors)

        for a, b in itertools.combinations(survivors, 2):
            if related(a, b):
                assert iou(a.box, b.box) <= config.dedup_iou

        for cluster in overlap_clusters(elements, related):
            if len(cluster) < 2 or len(cluster) > 8:
                continue

            members = [elements[i] for i in sorted(cluster)]
            expected = keep_set_oracle(members, suppresses)

            assert set(e.id for e in members if e.id in kept_ids) == \
                set(members[i].id for i in expected)

            checked += 1
            removed += len(members) - len(expected)

    assert checked > 0
    assert removed > 0


def test_suppression_is_idempotent(noisy_corpus, config):
    for item in noisy_corpus:
        elements = item.detections.elements

        once = nms_within_class(elements, config.nms_iou)
        assert nms_within_class(once, config.nms_iou) == once

        once = dedup_cross_class(elements, config)
        assert dedup_cross_class(once, config) == once

        once = filter_by_confidence(elements, config)
        assert filter_by_confidence(once, config) == once


def test_filter_uses_per_class_thresholds(el, config):
    config.update({"per_class_conf_threshold": {"Icon": 0.6}})
    elements = [el("t", (0.1, 0.1, 0.2, 0.2), confidence=0.35),
                el("i", (0.3, 0.3, 0.4, 0.4), "Icon", confidence=0.5)]

    assert [e.id for e in filter_by_confidence(elements, config)] == ["t"]


def test_filter_warns_for_classes_without_threshold(el, config):
    config.per_class_conf_threshold = {"Text": 0.5}
    elements = [el("t", (0.1, 0.1, 0.2, 0.2), confidence=0.1),
                el("i", (0.3, 0.3, 0.4, 0.4), "Icon", confidence=0.01)]

    with pytest.warns(UserWarning, match="Icon"):
        kept = filter_by_confidence(elements, config)

    assert [e.id for e in kept] == ["i"]


def segment_row(el):
    return [el("sc0", (0.05, 0.2, 0.3, 0.25), "SegmentedControl"),
            el("t1", (0.4, 0.21, 0.6, 0.24), text="Week"),
            el("t2", (0.7, 0.21, 0.9, 0.24), text="Month"),
            el("inside", (0.1, 0.21, 0.25, 0.24), text="Day"),
            el("below", (0.1, 0.4, 0.9, 0.45), text="Body")]


def test_repair_retypes_texts_on_the_row(el, config):
    repaired = repair_segmented_controls(segment_row(el), config)
    types = dict((e.id, e.ui_type) for e in repaired)

    assert types == {"sc0": "SegmentedControl", "t1": "SegmentedControl",
                     "t2": "SegmentedControl", "inside": "Text",
                     "below": "Text"}
    assert dict((e.id, e.text) for e in repaired)["t2"] == "Month"


def test_repair_is_idempotent(el, config):
    once = repair_segmented_controls(segment_row(el), config)

    assert repair_segmented_controls(once, config) == once


def test_repair_without_controls_is_a_no_op(el, config):
    elements = segment_row(el)[1:]

    assert repair_segmented_controls(elements, config) == elements


def test_merge_ocr_cases(el):
    elements = [el("t", (0.1, 0.1, 0.4, 0.15)),
                el("named", (0.1, 0.2, 0.4, 0.25), text="Already"),
                el("icon", (0.6, 0.1, 0.7, 0.15), "Icon")]

    merged = merge_ocr(elements, [
        (bbox(0.1, 0.1, 0.38, 0.15), "Hello"),
        (bbox(0.1, 0.2, 0.4, 0.25), "Ignored"),
        (bbox(0.6, 0.1, 0.7, 0.15), "Also ignored"),
        (bbox(0.1, 0.6, 0.4, 0.65), "Missed")])

    by_id = dict((e.id, e) for e in merged)

    assert by_id["t"].text == "Hello"
    assert by_id["named"].text == "Already"
    assert by_id["icon"].text is None
    assert by_id["ocr-0"].text == "Missed"
    assert by_id["ocr-0"].ui_type == "Text"
    assert len(merged) == 4


def test_merge_ocr_is_idempotent(el, noisy_corpus):
    elements = [el("wide", (0.1, 0.1, 0.5, 0.15)),
                el("narrow", (0.1, 0.1, 0.2, 0.15)),
                el("icon", (0.6, 0.1, 0.7, 0.15), "Icon")]
    ocr = [(bbox(0.1, 0.1, 0.45, 0.15), "Wide"),
           (bbox(0.1, 0.7, 0.4, 0.75), "Missed")]

    once = merge_ocr(elements, ocr)

    assert dict((e.id, e.text) for e in once) == {
        "wide": "Wide", "narrow": None, "icon": None, "ocr-0": "Missed"}
    assert merge_ocr(once, ocr) == once

    for item in noisy_corpus:
        once = merge_ocr(item.detections.elements, item.ocr)
        assert merge_ocr(once, item.ocr) == once


def test_repair_does_not_creep_past_the_row(el, config):
    elements = [el("sc", (0.05, 0.2, 0.3, 0.25), "SegmentedControl"),
                el("near", (0.4, 0.22, 0.6, 0.27), text="Near"),
                el("chained", (0.7, 0.24, 0.9, 0.29), text="Chained")]

    repaired = repair_segmented_controls(elements, config)

    assert [e.ui_type for e in repaired] == ["SegmentedControl",
                                             "SegmentedControl", "Text"]


def test_stage_accounting_balances(noisy_corpus, config):
    item = next(i for i in noisy_corpus if i.ocr)
    _, diagnostics = refine_screen(item.detections, config,
                                   ocr_boxes=item.ocr)

    assert [d["stage"] for d in diagnostics] == ["filter", "nms", "dedup",
                                                 "repair", "ocr"]

    for d in diagnostics:
        assert d["in"] == d["out"] + d["removed"] - d["added"]

    for before, after in zip(diagnostics, diagnostics[1:]):
        assert after["in"] == before["out"]
