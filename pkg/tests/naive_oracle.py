"""Deliberately naive, independent re-implementations used as test oracles.

Everything here is pure-Python arithmetic written straight from the
geometric definitions, kept separate from the package so the two routes
cannot share a bug.
"""

import math

LEFT_MCA = 362
RIGHT_MCA = 133
MID_EYES = 168
BOTTOM_NOSE = 2
LEFT_LIMBUS = (469, 470, 471, 472)
RIGHT_LIMBUS = (474, 475, 476, 477)


def naive_descriptors(points):
    """All eight descriptors from a raw point sequence, loop-and-divide style.

    Returns a dict keyed like the DescriptorVector fields.
    """
    def p(i):
        return points[i][0], points[i][1], points[i][2]

    lx, ly, lz = p(LEFT_MCA)
    rx, ry, rz = p(RIGHT_MCA)
    mx, my, mz = p(MID_EYES)
    nx, ny, nz = p(BOTTOM_NOSE)

    r_y = (lz - rz) / (lx - rx)
    r_x = (mz - nz) / (my - ny)
    w_f = math.sqrt((lx - rx) ** 2 + (ly - ry) ** 2 + (lz - rz) ** 2)
    h_f = math.sqrt((mx - nx) ** 2 + (my - ny) ** 2 + (mz - nz) ** 2)

    def side_offset(mca_x, mca_y, limbus):
        sx = sy = 0.0
        for i in limbus:
            sx += points[i][0]
            sy += points[i][1]
        return (mca_x - sx / 4.0) / w_f, (mca_y - sy / 4.0) / h_f

    left = side_offset(lx, ly, LEFT_LIMBUS)
    right = side_offset(rx, ry, RIGHT_LIMBUS)

    return {
        "r_y": r_y,
        "r_x": r_x,
        "w_f": w_f,
        "h_f": h_f,
        "me_x": mx,
        "me_y": my,
        "pp_x": left[0] + right[0],
        "pp_y": left[1] + right[1],
    }


def naive_mean(values):
    return math.fsum(values) / len(values)


def naive_sem(values):
    n = len(values)
    if n < 2:
        return 0.0
    m = naive_mean(values)
    var = math.fsum((v - m) ** 2 for v in values) / (n - 1)
    return math.sqrt(var / n)


def naive_r_squared(pred, truth):
    m = naive_mean(truth)
    ss_tot = math.fsum((t - m) ** 2 for t in truth)
    ss_res = math.fsum((p - t) ** 2 for p, t in zip(pred, truth))
    return 1.0 - ss_res / ss_tot
