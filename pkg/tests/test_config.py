from __future__ import print_function, division, absolute_import

import pytest

from screenpipes.config import heuristic_config, training_config
from screenpipes.exceptions import ConfigError
from screenpipes.input.ui_types import detector_types


def test_defaults():
    config = heuristic_config()

    assert config.dedup_iou == 0.8
    assert config.tab_zone_fraction == 0.2
    assert config.subtitle_y_gap == 0.03
    assert sorted(config.per_class_conf_threshold) == sorted(detector_types)


def test_threshold_overlay_merges():
    config = heuristic_config({"per_class_conf_threshold": {"Icon": 0.7}})

    assert config.per_class_conf_threshold["Icon"] == 0.7
    assert config.per_class_conf_threshold["Text"] == 0.3


def test_unknown_fields_and_bad_values_raise():
    with pytest.raises(ConfigError):
        heuristic_config({"nms_threshold": 0.5})

    with pytest.raises(ConfigError, match="nms_iou"):
        heuristic_config({"nms_iou": 1.5})

    with pytest.raises(ConfigError, match="dedup_iou"):
        heuristic_config({"dedup_iou": 0.04})

    with pytest.raises(ConfigError):
        heuristic_config({"per_class_conf_threshold": {"Button": 0.5}})

    with pytest.raises(ConfigError):
        heuristic_config({"tint_quantization_bits": 9})


def test_command_line_overrides():
    config = heuristic_config()
    config.set_from_strings(["nms_iou=0.6",
                             'per_class_conf_threshold={"Text": 0.1}'])

    assert config.nms_iou == 0.6
    assert config.per_class_conf_threshold["Text"] == 0.1

    with pytest.raises(ConfigError):
        config.set_from_strings(["nms_iou"])


def test_file_round_trip(tmp_path):
    path = str(tmp_path / "config.json")
    heuristic_config({"nms_iou": 0.45}).save(path)

    assert heuristic_config.from_file(path).to_dict() == \
        heuristic_config({"nms_iou": 0.45}).to_dict()


def test_bad_config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")

    with pytest.raises(ConfigError):
        heuristic_config.from_file(str(path))

    path.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        heuristic_config.from_file(str(path))


def test_training_config_checks():
    assert training_config(seed=3).seed == 3

    with pytest.raises(ConfigError):
        training_config(n_trees=0)

    with pytest.raises(ConfigError):
        training_config(validation_fraction=1.)
