from __future__ import print_function, division, absolute_import

import numpy as np
import pytest

from screenpipes.geometry import (bbox, iou, x_overlap, y_overlap,
                                  containment_fraction, x_overlap_fraction,
                                  center_in, union_box, clamp_coordinates,
                                  iou_matrix)


def test_iou_of_half_overlapping_boxes_is_one_third():
    a = bbox(0., 0., 0.2, 0.1)
    b = bbox(0.1, 0., 0.3, 0.1)

    assert iou(a, b) == pytest.approx(1./3.)
    assert iou(a, b) == pytest.approx(iou(b, a))


def test_iou_disjoint_and_identical():
    a = bbox(0.1, 0.1, 0.2, 0.2)

    assert iou(a, bbox(0.5, 0.5, 0.6, 0.6)) == 0.
    assert iou(a, a) == pytest.approx(1.)


def test_touching_boxes_do_not_overlap():
    a = bbox(0., 0., 0.5, 0.5)
    b = bbox(0.5, 0., 1., 0.5)

    assert x_overlap(a, b) == 0.
    assert y_overlap(a, b) == pytest.approx(0.5)
    assert iou(a, b) == 0.


@pytest.mark.parametrize("coords", [(0.5, 0.1, 0.5, 0.2),
                                    (0.1, 0.3, 0.2, 0.2),
                                    (0.1, float("nan"), 0.2, 0.3),
                                    (0., 0., float("inf"), 1.)])
def test_degenerate_or_non_finite_boxes_raise(coords):
    with pytest.raises(ValueError):
        bbox(*coords)


def test_containment_is_not_symmetric():
    inner = bbox(0.1, 0.1, 0.2, 0.2)
    outer = bbox(0., 0., 0.5, 0.5)

    assert containment_fraction(inner, outer) == pytest.approx(1.)
    assert containment_fraction(outer, inner) == pytest.approx(0.04)


def test_x_overlap_fraction_uses_first_width():
    narrow = bbox(0.1, 0.5, 0.2, 0.6)
    wide = bbox(0., 0., 1., 0.4)

    assert x_overlap_fraction(narrow, wide) == pytest.approx(1.)
    assert x_overlap_fraction(wide, narrow) == pytest.approx(0.1)


def test_center_in_includes_edges():
    target = bbox(0., 0., 0.2, 0.2)

    assert center_in(bbox(0.1, 0.1, 0.3, 0.3), target)
    assert center_in(bbox(0.1, 0.1, 0.2, 0.2), target)
    assert not center_in(bbox(0.15, 0.15, 0.35, 0.35), target)


def test_union_box_and_empty_union():
    u = union_box([bbox(0.1, 0.2, 0.3, 0.4), bbox(0.2, 0.1, 0.5, 0.3)])

    assert tuple(u) == pytest.approx((0.1, 0.1, 0.5, 0.4))

    with pytest.raises(ValueError):
        union_box([])


def test_clamp_coordinates_reports_change():
    values, changed = clamp_coordinates(-0.1, 0.2, 1.3, 0.4)

    assert values == [0., 0.2, 1., 0.4]
    assert changed

    values, changed = clamp_coordinates(0.1, 0.2, 0.3, 0.4)
    assert not changed


def test_center_and_dict():
    box = bbox(0.1, 0.1, 0.2, 0.2)

    assert box.width == pytest.approx(0.1)
    assert box.center == pytest.approx((0.15, 0.15))
    assert box.to_dict() == pytest.approx({"l": 0.1, "t": 0.1, "r": 0.2,
                                           "b": 0.2})


def test_iou_matrix_agrees_with_pairwise_iou():
    rng = np.random.default_rng(3)

    def random_box():
        x, y = rng.uniform(0., 0.8, 2)
        w, h = rng.uniform(0.01, 0.2, 2)
        return bbox(x, y, x + w, y + h)

    a = [random_box() for _ in range(7)]
    b = [random_box() for _ in range(5)]

    expected = np.array([[iou(p, q) for q in b] for p in a])

    assert np.allclose(iou_matrix(a, b), expected)
    assert iou_matrix([], b).shape == (0, 5)


def test_iou_is_unchanged_by_rescaling():
    rng = np.random.default_rng(5)

    for _ in range(200):
        x, y = rng.uniform(0.1, 0.7, 2)
        w, h = rng.uniform(0.01, 0.2, 2)
        a = bbox(x, y, x + w, y + h)
        b = bbox(x + rng.uniform(-.1, w), y + rng.uniform(-.1, h),
                 x + w + .05, y + h + .05)

        sx, sy = rng.uniform(0.3, 1., 2)

        def scaled(box):
            return bbox(box.left*sx, box.top*sy, box.right*sx,
                        box.bottom*sy)

        assert iou(scaled(a), scaled(b)) == pytest.approx(iou(a, b))
