"""Descriptor and prediction math for the live overlay.

Re-implemented here (ten coefficients, a handful of ratios) instead of
shelling out to the core per frame; equivalence with the core is pinned
by golden-file tests at 1e-9.
"""

from __future__ import annotations

import math

LEFT_MCA = 362
RIGHT_MCA = 133
MID_EYES = 168
BOTTOM_NOSE = 2
LEFT_LIMBUS = (469, 470, 471, 472)
RIGHT_LIMBUS = (474, 475, 476, 477)

_EPS = 1e-6

DESCRIPTOR_ORDER = ("r_y", "r_x", "w_f", "h_f", "me_x", "me_y", "pp_x", "pp_y")


def descriptors(points) -> dict | None:
    """The eight gaze descriptors from a 478-point landmark array.

    Returns None for degenerate geometry (collapsed spans) instead of
    raising: the live loop treats those frames as "no estimate".
    """
    lx, ly, lz = points[LEFT_MCA][:3]
    rx, ry, rz = points[RIGHT_MCA][:3]
    mx, my, mz = points[MID_EYES][:3]
    nx, ny, nz = points[BOTTOM_NOSE][:3]

    dx = lx - rx
    dy = my - ny
    if abs(dx) < _EPS or abs(dy) < _EPS:
        return None
    w_f = math.sqrt((lx - rx) ** 2 + (ly - ry) ** 2 + (lz - rz) ** 2)
    h_f = math.sqrt((mx - nx) ** 2 + (my - ny) ** 2 + (mz - nz) ** 2)
    if w_f < _EPS or h_f < _EPS:
        return None

    def offset(mca_x, mca_y, limbus):
        cx = sum(points[i][0] for i in limbus) / 4.0
        cy = sum(points[i][1] for i in limbus) / 4.0
        return (mca_x - cx) / w_f, (mca_y - cy) / h_f

    left = offset(lx, ly, LEFT_LIMBUS)
    right = offset(rx, ry, RIGHT_LIMBUS)
    return {
        "r_y": (lz - rz) / dx,
        "r_x": (mz - nz) / dy,
        "w_f": w_f,
        "h_f": h_f,
        "me_x": mx,
        "me_y": my,
        "pp_x": left[0] + right[0],
        "pp_y": left[1] + right[1],
    }


def predict(model: dict, d: dict) -> tuple[float, float]:
    """Screen point from the documented model contract:
    u = beta_x . [1, r_y, pp_x, w_f, me_x], v = beta_y . [1, r_x, pp_y, h_f, me_y]."""
    bx = model["beta_x"]
    by = model["beta_y"]
    u = bx[0] + bx[1] * d["r_y"] + bx[2] * d["pp_x"] + bx[3] * d["w_f"] + bx[4] * d["me_x"]
    v = by[0] + by[1] * d["r_x"] + by[2] * d["pp_y"] + by[3] * d["h_f"] + by[4] * d["me_y"]
    return u, v
