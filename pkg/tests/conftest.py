import numpy as np
import pytest

from gazekit.descriptors import DescriptorVector
from gazekit.landmarks import (
    BOTTOM_NOSE,
    LEFT_LIMBUS,
    LEFT_MCA,
    MID_EYES,
    NUM_LANDMARKS,
    RIGHT_LIMBUS,
    RIGHT_MCA,
    validate_frame,
)


def build_points(overrides=None, fill=(0.5, 0.5, 0.0)):
    """478 copies of ``fill`` with selected indices replaced."""
    pts = np.tile(np.asarray(fill, dtype=np.float64), (NUM_LANDMARKS, 1))
    if overrides:
        for idx, p in overrides.items():
            pts[idx] = p
    return pts


def random_valid_points(rng):
    """Structured random frame: valid, non-degenerate, and with enough
    margin that moderate translations and scalings stay in range."""
    pts = rng.uniform([0.30, 0.30, -0.10], [0.70, 0.70, 0.10], size=(NUM_LANDMARKS, 3))

    x_right = rng.uniform(0.30, 0.42)
    x_left = x_right + rng.uniform(0.10, 0.25)
    y_eyes = rng.uniform(0.35, 0.50)
    pts[RIGHT_MCA] = (x_right, y_eyes + rng.uniform(-0.02, 0.02), rng.uniform(-0.08, 0.08))
    pts[LEFT_MCA] = (x_left, y_eyes + rng.uniform(-0.02, 0.02), rng.uniform(-0.08, 0.08))

    x_mid = rng.uniform(0.40, 0.55)
    y_mid = rng.uniform(0.30, 0.42)
    pts[MID_EYES] = (x_mid, y_mid, rng.uniform(-0.08, 0.08))
    pts[BOTTOM_NOSE] = (x_mid + rng.uniform(-0.05, 0.05),
                        y_mid + rng.uniform(0.10, 0.25),
                        rng.uniform(-0.08, 0.08))

    for mca, limbus in ((pts[LEFT_MCA], LEFT_LIMBUS), (pts[RIGHT_MCA], RIGHT_LIMBUS)):
        center = mca[:2] + rng.uniform(-0.04, 0.04, size=2)
        for idx in limbus:
            pts[idx] = (center[0] + rng.uniform(-0.01, 0.01),
                        center[1] + rng.uniform(-0.01, 0.01),
                        rng.uniform(-0.08, 0.08))
    return pts


def random_valid_frame(rng):
    return validate_frame(random_valid_points(rng))


def random_descriptor(rng):
    """Well-spread descriptor values in plausible ranges."""
    return DescriptorVector(
        r_y=rng.uniform(-0.3, 0.3),
        r_x=rng.uniform(-0.5, 0.2),
        w_f=rng.uniform(0.04, 0.30),
        h_f=rng.uniform(0.05, 0.30),
        me_x=rng.uniform(0.2, 0.8),
        me_y=rng.uniform(0.2, 0.8),
        pp_x=rng.uniform(-0.4, 0.4),
        pp_y=rng.uniform(-0.4, 0.4),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
