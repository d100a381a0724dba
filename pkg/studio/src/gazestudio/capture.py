"""Camera frames and landmark producers.

The landmark producer is pluggable behind one callable: it takes a BGR
frame and returns a (478, 3) array of normalized landmarks, or None when
inference fails. The default producer wraps the MediaPipe face mesh with
iris refinement (the attention variant); ``variant="basic"`` runs the
non-refined mesh, whose frames lack the ten iris points and are therefore
reported as inference failures — exposed only to compare upstream
landmark quality through the identical pipeline.
"""

from __future__ import annotations

import numpy as np

from .formats import NUM_LANDMARKS


class NoCamera(Exception):
    pass


class OpenCVCamera:
    """Thin wrapper over cv2.VideoCapture; read() returns a frame or None."""

    def __init__(self, index: int = 0):
        import cv2

        self._cap = cv2.VideoCapture(index)
        if not self._cap.isOpened():
            raise NoCamera(f"cannot open camera {index}")

    def read(self):
        ok, frame = self._cap.read()
        return frame if ok else None

    def release(self):
        self._cap.release()


def mediapipe_producer(variant: str = "attention"):
    """Build the default landmark producer; requires the capture extra."""
    if variant not in ("attention", "basic"):
        raise ValueError(f"unknown landmark variant {variant!r}")
    try:
        import cv2
        import mediapipe as mp
    except ImportError as exc:
        raise RuntimeError(
            "the default landmark producer needs opencv-python and mediapipe "
            "(pip install 'gazekit-studio[capture]')") from exc

    mesh = mp.solutions.face_mesh.FaceMesh(
        max_num_faces=1,
        refine_landmarks=(variant == "attention"),
        min_detection_confidence=0.5,
        min_tracking_confidence=0.5,
    )

    def produce(frame_bgr):
        rgb = cv2.cvtColor(frame_bgr, cv2.COLOR_BGR2RGB)
        result = mesh.process(rgb)
        if not result.multi_face_landmarks:
            return None
        lms = result.multi_face_landmarks[0].landmark
        if len(lms) != NUM_LANDMARKS:
            return None  # basic variant: no iris points, unusable downstream
        return np.array([[p.x, p.y, p.z] for p in lms], dtype=np.float64)

    return produce
