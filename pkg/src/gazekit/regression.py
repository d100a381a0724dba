"""Per-axis linear gaze model: design rows, least-squares fit, prediction.

Each screen axis gets its own 5-coefficient model over an intercept and
four descriptors; the two axes never mix. The fit is ordinary least
squares via QR (column orthogonalization), never the normal equations,
with a condition-number guard so a collapsed design fails loudly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .descriptors import DescriptorVector
from .errors import MalformedModelFile, RankDeficient, TooFewSamples, UnsupportedVersion
from .kvdoc import dump_kv, parse_kv

MIN_SAMPLES = 5
CONDITION_LIMIT = 1e10
MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class CalibrationSample:
    """One labeled frame: descriptor plus the true on-screen point in pixels."""

    descriptor: DescriptorVector
    target_px: tuple[float, float]
    session_id: str = ""

    def __post_init__(self):
        if not (math.isfinite(self.target_px[0]) and math.isfinite(self.target_px[1])):
            raise ValueError(f"target_px must be finite, got {self.target_px!r}")


@dataclass(frozen=True)
class FitInfo:
    sample_count: int
    residual_rms_x: float
    residual_rms_y: float
    condition_x: float
    condition_y: float
    format_version: int = MODEL_FORMAT_VERSION


@dataclass(frozen=True)
class GazeModel:
    """Ten fitted coefficients; beta_x maps row_x to u, beta_y maps row_y to v."""

    beta_x: tuple[float, float, float, float, float]
    beta_y: tuple[float, float, float, float, float]
    fit_info: FitInfo


def design_rows(d: DescriptorVector) -> tuple[list[float], list[float]]:
    """Regressor rows for the two axes: [1, yaw, pupil, width, head] and
    [1, pitch, pupil, height, head]."""
    row_x = [1.0, d.r_y, d.pp_x, d.w_f, d.me_x]
    row_y = [1.0, d.r_x, d.pp_y, d.h_f, d.me_y]
    return row_x, row_y


def _solve_axis(X: np.ndarray, t: np.ndarray, axis: str) -> tuple[np.ndarray, float, float]:
    cond = float(np.linalg.cond(X))
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise RankDeficient(axis, cond)
    q, r = np.linalg.qr(X)
    beta = np.linalg.solve(r, q.T @ t)
    residual = X @ beta - t
    rms = float(np.sqrt(np.mean(residual**2)))
    return beta, rms, cond


def fit(samples: Sequence[CalibrationSample]) -> GazeModel:
    """Fit both axis models by ordinary least squares.

    Deterministic for a fixed sample order. Raises TooFewSamples below 5
    samples and RankDeficient when either design matrix has condition
    number above 1e10 (e.g. all frames identical).
    """
    n = len(samples)
    if n < MIN_SAMPLES:
        raise TooFewSamples(n)

    rows = [design_rows(s.descriptor) for s in samples]
    X_x = np.array([r[0] for r in rows], dtype=np.float64)
    X_y = np.array([r[1] for r in rows], dtype=np.float64)
    t_u = np.array([s.target_px[0] for s in samples], dtype=np.float64)
    t_v = np.array([s.target_px[1] for s in samples], dtype=np.float64)

    beta_x, rms_x, cond_x = _solve_axis(X_x, t_u, "x")
    beta_y, rms_y, cond_y = _solve_axis(X_y, t_v, "y")

    info = FitInfo(sample_count=n, residual_rms_x=rms_x, residual_rms_y=rms_y,
                   condition_x=cond_x, condition_y=cond_y)
    return GazeModel(beta_x=tuple(float(b) for b in beta_x),
                     beta_y=tuple(float(b) for b in beta_y),
                     fit_info=info)


def predict(model: GazeModel, d: DescriptorVector) -> tuple[float, float]:
    """Predicted screen point in pixels; deliberately not clamped to the
    screen so evaluation sees raw residuals."""
    row_x, row_y = design_rows(d)
    u = sum(b * v for b, v in zip(model.beta_x, row_x))
    v = sum(b * v for b, v in zip(model.beta_y, row_y))
    return u, v


_MODEL_KEYS_X = tuple(f"beta_x_{i}" for i in range(5))
_MODEL_KEYS_Y = tuple(f"beta_y_{i}" for i in range(5))


def serialize_model(model: GazeModel) -> str:
    """Render the model as a versioned key-value text document.

    Coefficients are written with repr() so deserialization is bit-exact.
    """
    info = model.fit_info
    pairs: list[tuple[str, object]] = [
        ("format_version", MODEL_FORMAT_VERSION),
        ("kind", "gaze-model"),
        ("sample_count", info.sample_count),
        ("residual_rms_x", info.residual_rms_x),
        ("residual_rms_y", info.residual_rms_y),
        ("condition_x", info.condition_x),
        ("condition_y", info.condition_y),
    ]
    pairs += list(zip(_MODEL_KEYS_X, model.beta_x))
    pairs += list(zip(_MODEL_KEYS_Y, model.beta_y))
    return dump_kv(pairs)


def deserialize_model(text: str) -> GazeModel:
    """Parse a model document; inverse of serialize_model.

    Raises MalformedModelFile on missing/bad fields and UnsupportedVersion
    on any format_version other than the current one.
    """
    try:
        fields = parse_kv(text)
    except ValueError as exc:
        raise MalformedModelFile(str(exc)) from exc

    version = fields.get("format_version")
    if version is None:
        raise MalformedModelFile("missing format_version")
    if version != str(MODEL_FORMAT_VERSION):
        raise UnsupportedVersion(version, MODEL_FORMAT_VERSION)

    def grab_float(key: str) -> float:
        if key not in fields:
            raise MalformedModelFile(f"missing field {key!r}")
        try:
            return float(fields[key])
        except ValueError as exc:
            raise MalformedModelFile(f"field {key!r} is not a number") from exc

    def grab_int(key: str) -> int:
        if key not in fields:
            raise MalformedModelFile(f"missing field {key!r}")
        try:
            return int(fields[key])
        except ValueError as exc:
            raise MalformedModelFile(f"field {key!r} is not an integer") from exc

    beta_x = tuple(grab_float(k) for k in _MODEL_KEYS_X)
    beta_y = tuple(grab_float(k) for k in _MODEL_KEYS_Y)
    if not all(map(math.isfinite, beta_x + beta_y)):
        raise MalformedModelFile("coefficients must be finite")
    info = FitInfo(
        sample_count=grab_int("sample_count"),
        residual_rms_x=grab_float("residual_rms_x"),
        residual_rms_y=grab_float("residual_rms_y"),
        condition_x=grab_float("condition_x"),
        condition_y=grab_float("condition_y"),
    )
    if info.sample_count < MIN_SAMPLES:
        raise MalformedModelFile(f"sample_count {info.sample_count} below {MIN_SAMPLES}")
    return GazeModel(beta_x=beta_x, beta_y=beta_y, fit_info=info)
