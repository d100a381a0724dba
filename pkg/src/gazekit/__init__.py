"""Geometry-based screen gaze estimation from 3D facial landmarks.

Pipeline: validate landmark frames, reduce each to an 8-D geometric
descriptor, fit a per-axis linear model from click-labeled calibration
samples, predict on-screen gaze, and report angular/pixel/cm accuracy.
A deterministic synthetic generator provides ground-truth sessions for
testing without a camera.
"""

from .descriptors import DescriptorVector, EyeSide, descriptor_vector
from .landmarks import FrameLandmarks, Landmark3, validate_frame
from .metrics import EvaluationReport, ScreenGeometry, cm_to_deg, evaluate, pixel_to_cm, r_squared
from .regression import (
    CalibrationSample,
    GazeModel,
    deserialize_model,
    design_rows,
    fit,
    predict,
    serialize_model,
)
from .session_io import SessionHeader, export_descriptors, read_session, session_samples, write_session
from .synth import HeadGeometry, HeadPose, SynthConfig, synth_frame, synth_session

__version__ = "0.1.0"

__all__ = [
    "CalibrationSample",
    "DescriptorVector",
    "EvaluationReport",
    "EyeSide",
    "FrameLandmarks",
    "GazeModel",
    "HeadGeometry",
    "HeadPose",
    "Landmark3",
    "ScreenGeometry",
    "SessionHeader",
    "SynthConfig",
    "cm_to_deg",
    "descriptor_vector",
    "deserialize_model",
    "design_rows",
    "evaluate",
    "export_descriptors",
    "fit",
    "pixel_to_cm",
    "predict",
    "r_squared",
    "read_session",
    "serialize_model",
    "session_samples",
    "synth_frame",
    "synth_session",
    "validate_frame",
    "write_session",
]
