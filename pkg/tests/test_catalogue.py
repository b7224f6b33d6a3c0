from __future__ import print_function, division, absolute_import

import sys
import json

from screenpipes.catalogue import process_catalogue, process_screen
from screenpipes.input import screen
from screenpipes.structure import load_trees
from screenpipes.synthgen import gen_spec, generate_corpus


def corpus_screens(n=8, seed=21):
    corpus = generate_corpus(gen_spec(seed=seed, n_screens=n))
    return ([item.detections for item in corpus],
            dict((item.screen_id, item.ocr) for item in corpus))


def test_process_screen_keeps_every_refined_element(noisy_corpus, config):
    item = noisy_corpus[3]
    tree, annotated, diagnostics = process_screen(item.detections, config,
                                                  ocr_boxes=item.ocr)

    assert sorted(tree.element_order()) == \
        sorted(e.id for e in annotated.elements)
    assert diagnostics[-1]["stage"] == "semantics"
    assert diagnostics[-1]["removed"] == diagnostics[-1]["added"] == 0


def test_catalogue_writes_outputs(tmp_path, config):
    screens, ocr = corpus_screens()

    cat = process_catalogue(screens, config, ocr=ocr, out_dir=str(tmp_path),
                            run="first")
    trees = cat.process()
    cat.write(fmt="csv")

    assert len(trees) == len(screens)
    assert list(cat.cat["status"]) == ["ok"]*len(screens)

    saved = load_trees(str(tmp_path / "trees" / "first" / "trees.json"))
    assert [t.screen_id for t in saved] == [s.screen_id for s in screens]

    reports = tmp_path / "reports" / "first"
    assert (reports / "catalogue.txt").exists()
    assert (reports / "catalogue.csv").exists()
    assert (reports / "stage_totals.csv").exists()

    diagnostics = json.loads((reports / "diagnostics.json").read_text())
    assert len(diagnostics) == len(screens)

    totals = cat.stage_totals()
    assert sorted(totals.index) == sorted(["filter", "nms", "dedup", "repair",
                                           "ocr", "semantics"])
    assert (totals["in"] == totals["out"] + totals["removed"]
            - totals["added"]).all()


def test_failing_screen_is_skipped(config, monkeypatch):
    module = sys.modules["screenpipes.catalogue.process_catalogue"]
    screens, _ = corpus_screens(n=4)
    real = module.process_screen

    def flaky(screen, *args, **kwargs):
        if screen.screen_id == screens[1].screen_id:
            raise ValueError("broken screen")
        return real(screen, *args, **kwargs)

    monkeypatch.setattr(module, "process_screen", flaky)

    cat = process_catalogue(screens, config)
    trees = cat.process()

    assert len(trees) == 3
    assert list(cat.cat["status"]) == ["ok", "skipped", "ok", "ok"]
    assert "broken screen" in cat.cat["error"][1]


def test_parallel_results_keep_input_order(config):
    screens, ocr = corpus_screens(n=6, seed=22)

    serial = process_catalogue(screens, config, ocr=ocr).process()
    parallel = process_catalogue(screens, config, ocr=ocr).process(n_jobs=2)

    assert [t.to_dict() for t in parallel] == [t.to_dict() for t in serial]


def test_empty_catalogue(tmp_path, config):
    cat = process_catalogue([], config, out_dir=str(tmp_path))

    assert cat.process() == []
    cat.write()

    assert load_trees(str(tmp_path / "trees" / "trees.json")) == []
    assert not (tmp_path / "reports" / "catalogue.txt").exists()


def test_trees_do_not_depend_on_pixel_size(noisy_corpus, config):
    for item in noisy_corpus[:40]:
        d = item.detections
        small = screen(d.screen_id, 390, 844, d.elements)
        large = screen(d.screen_id, 780, 1688, d.elements)

        tree_small, refined_small, _ = process_screen(small, config,
                                                      ocr_boxes=item.ocr)
        tree_large, refined_large, _ = process_screen(large, config,
                                                      ocr_boxes=item.ocr)

        assert refined_small.elements == refined_large.elements
        assert tree_small.to_dict() == tree_large.to_dict()
