"""Landmark frame representation and validation.

A frame is the output of an upstream face-mesh detector: 478 points in
normalized image coordinates (origin top-left, x and y nominally in [0, 1],
z a relative depth on the same scale as x). Points may spill slightly
outside the frame; anything beyond [-0.5, 1.5] in x or y is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import NonFiniteCoordinate, OutOfRangeCoordinate, WrongPointCount

NUM_LANDMARKS = 478

# Index map of the landmarks the descriptor formulas read.
LEFT_MCA = 362        # medial canthal angle, subject's left eye
RIGHT_MCA = 133       # medial canthal angle, subject's right eye
MID_EYES = 168        # point midway between the eyes (nose bridge)
BOTTOM_NOSE = 2       # bottom of the nose
LEFT_LIMBUS = (469, 470, 471, 472)    # cardinal limbus points, left eye
RIGHT_LIMBUS = (474, 475, 476, 477)   # cardinal limbus points, right eye

XY_MIN = -0.5
XY_MAX = 1.5


class Landmark3(NamedTuple):
    """One landmark in normalized image coordinates."""

    x: float
    y: float
    z: float


@dataclass(frozen=True)
class FrameLandmarks:
    """One validated frame: exactly 478 landmarks plus a capture time.

    ``points`` is a read-only float64 array of shape (478, 3). Construct
    through :func:`validate_frame`; direct construction skips validation.
    """

    points: np.ndarray = field(repr=False)
    timestamp_ms: float = 0.0

    def landmark(self, index: int) -> Landmark3:
        x, y, z = self.points[index]
        return Landmark3(float(x), float(y), float(z))


def validate_frame(points: Iterable[Sequence[float]] | np.ndarray,
                   timestamp_ms: float = 0.0) -> FrameLandmarks:
    """Validate a point sequence into a FrameLandmarks.

    Checks run in a fixed order so every bad input maps to exactly one
    error class: point count, then finiteness, then x/y range.

    Raises:
        WrongPointCount: length is not 478.
        NonFiniteCoordinate: any coordinate is NaN or infinite.
        OutOfRangeCoordinate: x or y outside [-0.5, 1.5].
    """
    try:
        arr = np.asarray(points, dtype=np.float64)
    except (TypeError, ValueError):
        # Ragged or non-numeric input is a shape violation.
        raise WrongPointCount(len(points) if hasattr(points, "__len__") else 0) from None
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise WrongPointCount(arr.shape[0] if arr.ndim >= 1 else 0)
    if arr.shape[0] != NUM_LANDMARKS:
        raise WrongPointCount(arr.shape[0])

    finite = np.isfinite(arr)
    if not finite.all():
        bad = int(np.argwhere(~finite.all(axis=1))[0, 0])
        raise NonFiniteCoordinate(bad)

    xy = arr[:, :2]
    in_range = (xy >= XY_MIN) & (xy <= XY_MAX)
    if not in_range.all():
        rows, cols = np.nonzero(~in_range)
        raise OutOfRangeCoordinate(int(rows[0]), float(xy[rows[0], cols[0]]))

    out = arr.copy()
    out.setflags(write=False)
    return FrameLandmarks(points=out, timestamp_ms=float(timestamp_ms))
