import numpy as np
import pytest

from gazestudio.app import Quit

LEFT_MCA = 362
RIGHT_MCA = 133
MID_EYES = 168
BOTTOM_NOSE = 2
LEFT_LIMBUS = (469, 470, 471, 472)
RIGHT_LIMBUS = (474, 475, 476, 477)


class FakeCamera:
    """Yields dummy frames, then None after ``frames`` reads (unplugged)."""

    def __init__(self, frames=10_000):
        self._left = frames
        self.released = False

    def read(self):
        if self._left <= 0:
            return None
        self._left -= 1
        return np.zeros((4, 4, 3), dtype=np.uint8)

    def release(self):
        self.released = True


class SyntheticLandmarkProducer:
    """Deterministic stand-in for the face-mesh network.

    Ignores the camera frame and emits a plausible, varying 478-point
    face so a captured session has a full-rank calibration design.
    ``fail_on`` marks call numbers (1-based) that return None.
    """

    def __init__(self, seed=0, fail_on=()):
        self._rng = np.random.default_rng(seed)
        self._fail_on = set(fail_on)
        self.calls = 0

    def __call__(self, frame_bgr):
        self.calls += 1
        if self.calls in self._fail_on:
            return None
        rng = self._rng
        pts = rng.uniform([0.3, 0.3, -0.05], [0.7, 0.7, 0.05], size=(478, 3))
        x_right = rng.uniform(0.32, 0.40)
        x_left = x_right + rng.uniform(0.12, 0.22)
        y_eyes = rng.uniform(0.38, 0.46)
        pts[RIGHT_MCA] = (x_right, y_eyes, rng.uniform(-0.04, 0.04))
        pts[LEFT_MCA] = (x_left, y_eyes + rng.uniform(-0.01, 0.01), rng.uniform(-0.04, 0.04))
        x_mid = (x_left + x_right) / 2
        y_mid = y_eyes - rng.uniform(0.02, 0.05)
        pts[MID_EYES] = (x_mid, y_mid, rng.uniform(-0.04, 0.04))
        pts[BOTTOM_NOSE] = (x_mid + rng.uniform(-0.02, 0.02),
                            y_mid + rng.uniform(0.12, 0.18),
                            rng.uniform(-0.04, 0.04))
        for mca, limbus in ((pts[LEFT_MCA], LEFT_LIMBUS), (pts[RIGHT_MCA], RIGHT_LIMBUS)):
            center = mca[:2] + rng.uniform(-0.03, 0.03, size=2)
            for idx in limbus:
                pts[idx] = (center[0] + rng.uniform(-0.008, 0.008),
                            center[1] + rng.uniform(-0.008, 0.008),
                            rng.uniform(-0.04, 0.04))
        return pts


class ScriptedSurface:
    """Replays one batch of events per poll; records every render call."""

    def __init__(self, script):
        self._script = list(script)
        self.opened = False
        self.closed = False
        self.calibration_renders = []
        self.live_renders = []

    def open(self, width_px, height_px):
        self.opened = True

    def poll(self):
        if self._script:
            return self._script.pop(0)
        return [Quit()]

    def render_calibration(self, clicks_done, clicks_target, status):
        self.calibration_renders.append((clicks_done, clicks_target, status))

    def render_live(self, marker, latency_ms, status):
        self.live_renders.append((marker, latency_ms, status))

    def close(self):
        self.closed = True


@pytest.fixture
def producer():
    return SyntheticLandmarkProducer(seed=7)
