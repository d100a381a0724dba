"""Human-in-the-loop capture client for gazekit.

Calibration mode shows a fullscreen surface; every left click captures
the latest webcam landmark frame labeled with the click position and
appends it to a gazekit session file. Live mode overlays predictions
from a fitted gazekit model file in real time.
"""

from .app import CalibrationApp, LiveApp, Mode, StudioState
from .formats import ScreenInfo, StudioFormatError, load_model, parse_model
from .predictor import descriptors, predict

__version__ = "0.1.0"

__all__ = [
    "CalibrationApp",
    "LiveApp",
    "Mode",
    "ScreenInfo",
    "StudioFormatError",
    "StudioState",
    "descriptors",
    "load_model",
    "parse_model",
    "predict",
]
