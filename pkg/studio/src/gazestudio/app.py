"""Interaction loops for calibration capture and the live gaze overlay.

Both apps are written against two injected interfaces so the logic is
testable without hardware: a camera with ``read() -> frame | None`` and a
surface that shows a fullscreen canvas and reports click/quit events.
One session record is appended per counted click, never in between.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional

from .formats import ScreenInfo, append_session_frame, load_model, write_session_header
from .predictor import descriptors, predict


class Mode(enum.Enum):
    CALIBRATING = "calibrating"
    LIVE_PREVIEW = "live-preview"


@dataclass
class StudioState:
    mode: Mode
    screen: ScreenInfo
    clicks_captured: int = 0
    model_path: Optional[str] = None


@dataclass
class Click:
    x: float
    y: float


class Quit:
    pass


INSTRUCTIONS = "Fixate the tip of the mouse cursor and left-click. Esc/q aborts."


class CalibrationApp:
    """Capture one labeled frame per click until clicks_target is reached.

    The most recent completed landmark inference before the click is used;
    clicks with no usable landmarks are announced and not counted.
    """

    def __init__(self, camera, producer, surface, out_path, screen: ScreenInfo,
                 subject_id: str, session_id: str, clicks_target: int = 20,
                 clock=time.monotonic):
        self._camera = camera
        self._producer = producer
        self._surface = surface
        self._out_path = out_path
        self._subject_id = subject_id
        self._session_id = session_id
        self._clicks_target = clicks_target
        self._clock = clock
        self.state = StudioState(mode=Mode.CALIBRATING, screen=screen)

    def run(self) -> int:
        """Returns the number of clicks captured (== records appended)."""
        write_session_header(self._out_path, self._subject_id, self._session_id,
                             self.state.screen, source="live")
        self._surface.open(self.state.screen.width_px, self.state.screen.height_px)
        start = self._clock()
        latest_points = None
        status = INSTRUCTIONS
        try:
            while self.state.clicks_captured < self._clicks_target:
                frame = self._camera.read()
                if frame is None:
                    status = "camera lost; stopping"
                    break
                points = self._producer(frame)
                if points is not None:
                    latest_points = points

                stop = False
                for event in self._surface.poll():
                    if isinstance(event, Quit):
                        stop = True
                        break
                    if isinstance(event, Click):
                        if latest_points is None:
                            status = "no landmarks yet; click not counted"
                            continue
                        timestamp_ms = (self._clock() - start) * 1000.0
                        append_session_frame(self._out_path, timestamp_ms,
                                             latest_points, (event.x, event.y))
                        self.state.clicks_captured += 1
                        status = (f"{self.state.clicks_captured}/"
                                  f"{self._clicks_target} captured. {INSTRUCTIONS}")
                if stop:
                    break
                self._surface.render_calibration(self.state.clicks_captured,
                                                 self._clicks_target, status)
        finally:
            self._surface.close()
        return self.state.clicks_captured


class LiveApp:
    """Overlay the model's gaze estimate and the frame latency."""

    def __init__(self, camera, producer, surface, model_path, screen: ScreenInfo,
                 clock=time.monotonic):
        self._model = load_model(model_path)  # fails before any window opens
        self._camera = camera
        self._producer = producer
        self._surface = surface
        self._clock = clock
        self.state = StudioState(mode=Mode.LIVE_PREVIEW, screen=screen,
                                 model_path=str(model_path))

    def run(self) -> None:
        self._surface.open(self.state.screen.width_px, self.state.screen.height_px)
        try:
            while True:
                tick = self._clock()
                frame = self._camera.read()
                if frame is None:
                    self._surface.render_live(None, None, "camera lost; shutting down")
                    break
                points = self._producer(frame)
                marker = None
                status = "no estimate"
                if points is not None:
                    d = descriptors(points)
                    if d is not None:
                        marker = predict(self._model, d)
                        status = ""
                latency_ms = (self._clock() - tick) * 1000.0
                if any(isinstance(e, Quit) for e in self._surface.poll()):
                    break
                self._surface.render_live(marker, latency_ms, status)
        finally:
            self._surface.close()
