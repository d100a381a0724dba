import math

import numpy as np
import pytest

from conftest import build_points
from gazekit.errors import NonFiniteCoordinate, OutOfRangeCoordinate, WrongPointCount
from gazekit.landmarks import (
    LEFT_LIMBUS,
    LEFT_MCA,
    NUM_LANDMARKS,
    RIGHT_LIMBUS,
    RIGHT_MCA,
    Landmark3,
    validate_frame,
)


def test_degenerate_but_well_formed_frame_is_valid():
    frame = validate_frame(build_points())
    assert frame.points.shape == (478, 3)
    assert frame.landmark(0) == Landmark3(0.5, 0.5, 0.0)


def test_468_points_rejected():
    with pytest.raises(WrongPointCount) as exc:
        validate_frame(build_points()[:468])
    assert exc.value.count == 468


def test_too_many_points_rejected():
    pts = np.vstack([build_points(), [[0.5, 0.5, 0.0]]])
    with pytest.raises(WrongPointCount):
        validate_frame(pts)


def test_out_of_range_y_rejected():
    pts = build_points({100: (0.5, 2.0, 0.0)})
    with pytest.raises(OutOfRangeCoordinate) as exc:
        validate_frame(pts)
    assert exc.value.index == 100
    assert exc.value.value == 2.0


def test_slightly_outside_frame_is_accepted():
    pts = build_points({7: (-0.5, 1.5, 0.3)})
    frame = validate_frame(pts)
    assert frame.landmark(7).x == -0.5


def test_nan_coordinate_rejected():
    pts = build_points({42: (0.5, math.nan, 0.0)})
    with pytest.raises(NonFiniteCoordinate) as exc:
        validate_frame(pts)
    assert exc.value.index == 42


def test_infinite_z_rejected():
    pts = build_points({3: (0.5, 0.5, math.inf)})
    with pytest.raises(NonFiniteCoordinate):
        validate_frame(pts)


def test_ragged_input_is_a_count_violation():
    ragged = [(0.5, 0.5, 0.0)] * 477 + [(0.5, 0.5)]
    with pytest.raises(WrongPointCount):
        validate_frame(ragged)


def test_error_classification_is_ordered():
    # A frame that is both short and non-finite reports the count problem;
    # a non-finite value beats a range violation on another landmark.
    short = build_points({0: (math.nan, 0.5, 0.0)})[:100]
    with pytest.raises(WrongPointCount):
        validate_frame(short)
    mixed = build_points({5: (0.5, 0.5, math.nan), 9: (0.5, 2.0, 0.0)})
    with pytest.raises(NonFiniteCoordinate):
        validate_frame(mixed)


def test_accepts_plain_sequences_and_copies_input():
    listed = [(0.5, 0.5, 0.0)] * NUM_LANDMARKS
    frame = validate_frame(listed, timestamp_ms=123.0)
    assert frame.timestamp_ms == 123.0

    arr = build_points()
    frame = validate_frame(arr)
    arr[0] = (0.0, 0.0, 9.9)
    assert frame.landmark(0) == Landmark3(0.5, 0.5, 0.0)


def test_points_are_read_only():
    frame = validate_frame(build_points())
    with pytest.raises(ValueError):
        frame.points[0, 0] = 1.0


def test_index_constants():
    indices = [LEFT_MCA, RIGHT_MCA, *LEFT_LIMBUS, *RIGHT_LIMBUS]
    assert all(0 <= i < NUM_LANDMARKS for i in indices)
    assert len(set(LEFT_LIMBUS)) == 4
    assert len(set(RIGHT_LIMBUS)) == 4
    assert set(LEFT_LIMBUS).isdisjoint(RIGHT_LIMBUS)
