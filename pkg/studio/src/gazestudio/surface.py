"""Fullscreen OpenCV surface: one window, mouse events, simple overlays."""

from __future__ import annotations

import numpy as np

from .app import Click, Quit

_QUIT_KEYS = (27, ord("q"))  # Esc


class OpenCVSurface:
    def __init__(self, window_name: str = "gazestudio"):
        self._name = window_name
        self._events: list = []
        self._size = (640, 480)
        self._cv2 = None

    def open(self, width_px, height_px):
        import cv2

        self._cv2 = cv2
        self._size = (int(width_px), int(height_px))
        cv2.namedWindow(self._name, cv2.WND_PROP_FULLSCREEN)
        cv2.setWindowProperty(self._name, cv2.WND_PROP_FULLSCREEN,
                              cv2.WINDOW_FULLSCREEN)
        cv2.setMouseCallback(self._name, self._on_mouse)

    def _on_mouse(self, event, x, y, flags, param):
        if event == self._cv2.EVENT_LBUTTONDOWN:
            self._events.append(Click(float(x), float(y)))

    def poll(self):
        key = self._cv2.waitKey(1) & 0xFF
        if key in _QUIT_KEYS:
            self._events.append(Quit())
        events, self._events = self._events, []
        return events

    def _canvas(self):
        w, h = self._size
        return np.zeros((h, w, 3), dtype=np.uint8)

    def render_calibration(self, clicks_done, clicks_target, status):
        cv2 = self._cv2
        canvas = self._canvas()
        cv2.putText(canvas, status, (40, 60), cv2.FONT_HERSHEY_SIMPLEX,
                    0.8, (255, 255, 255), 2)
        cv2.putText(canvas, f"{clicks_done}/{clicks_target}", (40, 110),
                    cv2.FONT_HERSHEY_SIMPLEX, 0.8, (0, 255, 0), 2)
        cv2.imshow(self._name, canvas)

    def render_live(self, marker, latency_ms, status):
        cv2 = self._cv2
        canvas = self._canvas()
        if marker is not None:
            w, h = self._size
            x = int(min(max(marker[0], 0), w - 1))
            y = int(min(max(marker[1], 0), h - 1))
            cv2.circle(canvas, (x, y), 18, (0, 255, 0), 3)
        if latency_ms is not None:
            cv2.putText(canvas, f"{latency_ms:.1f} ms/frame", (40, 60),
                        cv2.FONT_HERSHEY_SIMPLEX, 0.8, (255, 255, 255), 2)
        if status:
            cv2.putText(canvas, status, (40, 110), cv2.FONT_HERSHEY_SIMPLEX,
                        0.8, (0, 0, 255), 2)
        cv2.imshow(self._name, canvas)

    def close(self):
        if self._cv2 is not None:
            self._cv2.destroyWindow(self._name)
