"""Geometric descriptors of head and eye pose from one landmark frame.

Eight numbers summarize a frame: two depth-over-offset ratios acting as
small-angle proxies for head yaw and pitch, face width and height (scale,
inversely proportional to camera distance), the mid-eye point (head
position), and a combined per-eye pupil offset relative to face size.

Ratios are kept raw rather than passed through arctan so the downstream
model stays exactly linear in the stored features.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateGeometry
from .landmarks import (
    BOTTOM_NOSE,
    LEFT_LIMBUS,
    LEFT_MCA,
    MID_EYES,
    RIGHT_LIMBUS,
    RIGHT_MCA,
    FrameLandmarks,
)

# Denominators and distances below this are treated as a degenerate pose.
# Far smaller than any plausible inter-landmark spacing in normalized units.
DEGENERACY_EPS = 1e-6


class EyeSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


_SIDE_INDICES = {
    EyeSide.LEFT: (LEFT_MCA, LEFT_LIMBUS),
    EyeSide.RIGHT: (RIGHT_MCA, RIGHT_LIMBUS),
}


@dataclass(frozen=True)
class DescriptorVector:
    """The 8-D geometric descriptor of one frame."""

    r_y: float    # head yaw ratio (dimensionless)
    r_x: float    # head pitch ratio (dimensionless)
    w_f: float    # face width, normalized units
    h_f: float    # face height, normalized units
    me_x: float   # mid-eye x (head position)
    me_y: float   # mid-eye y
    pp_x: float   # combined pupil offset, x
    pp_y: float   # combined pupil offset, y

    def __post_init__(self):
        if not all(map(math.isfinite, self.as_tuple())):
            raise ValueError("descriptor components must be finite")
        if self.w_f <= 0 or self.h_f <= 0:
            raise ValueError("face spans must be positive")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.r_y, self.r_x, self.w_f, self.h_f,
                self.me_x, self.me_y, self.pp_x, self.pp_y)


def head_yaw_ratio(frame: FrameLandmarks) -> float:
    """Depth difference over x difference of the two inner eye corners.

    Raises DegenerateGeometry when the corners are vertically aligned
    (|x gap| < 1e-6), i.e. the head is rolled roughly 90 degrees.
    """
    left = frame.points[LEFT_MCA]
    right = frame.points[RIGHT_MCA]
    dx = float(left[0] - right[0])
    if abs(dx) < DEGENERACY_EPS:
        raise DegenerateGeometry("inner eye corners vertically aligned")
    return float(left[2] - right[2]) / dx


def head_pitch_ratio(frame: FrameLandmarks) -> float:
    """Depth difference over y difference of mid-eye point and nose bottom."""
    top = frame.points[MID_EYES]
    bottom = frame.points[BOTTOM_NOSE]
    dy = float(top[1] - bottom[1])
    if abs(dy) < DEGENERACY_EPS:
        raise DegenerateGeometry("mid-eye point and nose bottom horizontally aligned")
    return float(top[2] - bottom[2]) / dy


def _distance3(frame: FrameLandmarks, i: int, j: int, what: str) -> float:
    d = frame.points[i] - frame.points[j]
    dist = math.sqrt(float(d[0]) ** 2 + float(d[1]) ** 2 + float(d[2]) ** 2)
    if dist < DEGENERACY_EPS:
        raise DegenerateGeometry(f"{what} collapsed to a point")
    return dist


def face_width(frame: FrameLandmarks) -> float:
    """3D distance between the two inner eye corners."""
    return _distance3(frame, LEFT_MCA, RIGHT_MCA, "inner eye corners")


def face_height(frame: FrameLandmarks) -> float:
    """3D distance between the mid-eye point and the nose bottom."""
    return _distance3(frame, MID_EYES, BOTTOM_NOSE, "mid-eye to nose span")


def pupil_offset(frame: FrameLandmarks, side: EyeSide) -> tuple[float, float]:
    """Offset of one eye's corner from its limbus centroid, face-normalized.

    x is normalized by face width, y by face height; the asymmetry is
    deliberate and must match the fitted model's convention.
    """
    w_f = face_width(frame)
    h_f = face_height(frame)
    mca_idx, limbus = _SIDE_INDICES[side]
    mca = frame.points[mca_idx]
    cx = sum(float(frame.points[i][0]) for i in limbus) / 4.0
    cy = sum(float(frame.points[i][1]) for i in limbus) / 4.0
    return (float(mca[0]) - cx) / w_f, (float(mca[1]) - cy) / h_f


def combined_pupil_offset(frame: FrameLandmarks) -> tuple[float, float]:
    """Component-wise sum (not mean) of the left and right pupil offsets."""
    lx, ly = pupil_offset(frame, EyeSide.LEFT)
    rx, ry = pupil_offset(frame, EyeSide.RIGHT)
    return lx + rx, ly + ry


def descriptor_vector(frame: FrameLandmarks) -> DescriptorVector:
    """Compute all eight descriptors for one frame.

    Raises DegenerateGeometry if any constituent is degenerate.
    """
    mid = frame.points[MID_EYES]
    pp_x, pp_y = combined_pupil_offset(frame)
    return DescriptorVector(
        r_y=head_yaw_ratio(frame),
        r_x=head_pitch_ratio(frame),
        w_f=face_width(frame),
        h_f=face_height(frame),
        me_x=float(mid[0]),
        me_y=float(mid[1]),
        pp_x=pp_x,
        pp_y=pp_y,
    )
