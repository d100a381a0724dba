"""Evaluation of a fitted model against a held-out session.

Reports per-axis R^2 and mean absolute error in pixels, converted to cm
through the screen's pixel pitch and to visual-angle degrees through
atan(error / viewing distance). Every reported (cm, deg) pair satisfies
deg = atan(cm / distance) exactly, so the three unit systems stay
mutually consistent.

All aggregation goes through math.fsum (exactly rounded), which makes the
results independent of sample order to the last bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptySession, LengthMismatch, ZeroVariance
from .kvdoc import dump_kv
from .regression import CalibrationSample, GazeModel, predict

REPORT_FORMAT_VERSION = 1


@dataclass(frozen=True)
class ScreenGeometry:
    """Pixel resolution, physical panel size and viewing distance."""

    width_px: float
    height_px: float
    width_cm: float
    height_cm: float
    view_distance_cm: float

    def __post_init__(self):
        for name in ("width_px", "height_px", "width_cm", "height_cm", "view_distance_cm"):
            value = float(getattr(self, name))
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"ScreenGeometry.{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, value)

    def pixel_pitch_cm(self, axis: str) -> float:
        if axis == "x":
            return self.width_cm / self.width_px
        if axis == "y":
            return self.height_cm / self.height_px
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


@dataclass(frozen=True)
class EvaluationReport:
    r_squared_x: float
    r_squared_y: float
    mean_abs_error_px_x: float
    mean_abs_error_px_y: float
    mean_abs_error_cm_x: float
    mean_abs_error_cm_y: float
    mean_angular_error_deg_x: float
    mean_angular_error_deg_y: float
    sem_px_x: float
    sem_px_y: float
    sem_cm_x: float
    sem_cm_y: float
    sem_deg_x: float
    sem_deg_y: float
    mean_euclidean_error_px: float
    sample_count: int
    skipped_count: int
    view_distance_cm: float


def r_squared(pred: Sequence[float], truth: Sequence[float]) -> float:
    """Coefficient of determination, 1 - SS_res/SS_tot; negative for models
    worse than the truth mean.

    Raises LengthMismatch for unequal series and ZeroVariance when the
    truth series is constant (including length < 2).
    """
    if len(pred) != len(truth):
        raise LengthMismatch(len(pred), len(truth))
    n = len(truth)
    mean_truth = math.fsum(truth) / n if n else 0.0
    ss_tot = math.fsum((t - mean_truth) ** 2 for t in truth)
    if ss_tot == 0.0:
        raise ZeroVariance("truth series has zero variance")
    ss_res = math.fsum((p - t) ** 2 for p, t in zip(pred, truth))
    return 1.0 - ss_res / ss_tot


def pixel_to_cm(err_px: float, axis: str, geom: ScreenGeometry) -> float:
    """Convert a pixel error along one axis to cm via the pixel pitch."""
    return err_px * geom.pixel_pitch_cm(axis)


def cm_to_deg(err_cm: float, geom: ScreenGeometry) -> float:
    """Visual angle in degrees subtended by an on-screen offset of err_cm."""
    return math.degrees(math.atan(err_cm / geom.view_distance_cm))


def _mean_and_sem(series: list[float]) -> tuple[float, float]:
    n = len(series)
    mean = math.fsum(series) / n
    if n < 2:
        return mean, 0.0
    var = math.fsum((v - mean) ** 2 for v in series) / (n - 1)
    return mean, math.sqrt(var) / math.sqrt(n)


def evaluate(model: GazeModel, samples: Sequence[CalibrationSample],
             geom: ScreenGeometry, skipped: int = 0) -> EvaluationReport:
    """Score a model on labeled samples.

    ``skipped`` carries the count of frames dropped upstream (degenerate
    geometry under the skip-and-count policy) into the report.

    Raises EmptySession when there are no samples to score.
    """
    if not samples:
        raise EmptySession("no labeled samples to evaluate")

    preds = [predict(model, s.descriptor) for s in samples]
    truth_u = [s.target_px[0] for s in samples]
    truth_v = [s.target_px[1] for s in samples]
    pred_u = [p[0] for p in preds]
    pred_v = [p[1] for p in preds]

    abs_err_u = [abs(p - t) for p, t in zip(pred_u, truth_u)]
    abs_err_v = [abs(p - t) for p, t in zip(pred_v, truth_v)]
    mean_u, sem_u = _mean_and_sem(abs_err_u)
    mean_v, sem_v = _mean_and_sem(abs_err_v)

    # 2D error uses the x-axis pixel pitch scale only in px; informational.
    eucl = [math.hypot(pu - tu, pv - tv)
            for pu, tu, pv, tv in zip(pred_u, truth_u, pred_v, truth_v)]
    mean_eucl = math.fsum(eucl) / len(eucl)

    mean_cm_u = pixel_to_cm(mean_u, "x", geom)
    mean_cm_v = pixel_to_cm(mean_v, "y", geom)
    sem_cm_u = pixel_to_cm(sem_u, "x", geom)
    sem_cm_v = pixel_to_cm(sem_v, "y", geom)

    return EvaluationReport(
        r_squared_x=r_squared(pred_u, truth_u),
        r_squared_y=r_squared(pred_v, truth_v),
        mean_abs_error_px_x=mean_u,
        mean_abs_error_px_y=mean_v,
        mean_abs_error_cm_x=mean_cm_u,
        mean_abs_error_cm_y=mean_cm_v,
        mean_angular_error_deg_x=cm_to_deg(mean_cm_u, geom),
        mean_angular_error_deg_y=cm_to_deg(mean_cm_v, geom),
        sem_px_x=sem_u,
        sem_px_y=sem_v,
        sem_cm_x=sem_cm_u,
        sem_cm_y=sem_cm_v,
        sem_deg_x=cm_to_deg(sem_cm_u, geom),
        sem_deg_y=cm_to_deg(sem_cm_v, geom),
        mean_euclidean_error_px=mean_eucl,
        sample_count=len(samples),
        skipped_count=skipped,
        view_distance_cm=geom.view_distance_cm,
    )


_REPORT_FIELDS = (
    "r_squared_x", "r_squared_y",
    "mean_abs_error_px_x", "mean_abs_error_px_y",
    "mean_abs_error_cm_x", "mean_abs_error_cm_y",
    "mean_angular_error_deg_x", "mean_angular_error_deg_y",
    "sem_px_x", "sem_px_y",
    "sem_cm_x", "sem_cm_y",
    "sem_deg_x", "sem_deg_y",
    "mean_euclidean_error_px",
    "sample_count", "skipped_count", "view_distance_cm",
)


def report_document(report: EvaluationReport) -> str:
    """Render the report in the same kv format family as the model file."""
    pairs: list[tuple[str, object]] = [
        ("format_version", REPORT_FORMAT_VERSION),
        ("kind", "evaluation-report"),
    ]
    pairs += [(name, getattr(report, name)) for name in _REPORT_FIELDS]
    return dump_kv(pairs)


def report_csv_row(report: EvaluationReport) -> tuple[str, str]:
    """(header, row) pair for flat CSV aggregation across runs."""
    header = ",".join(_REPORT_FIELDS)
    row = ",".join(repr(v) if isinstance(v, float) else str(v)
                   for v in (getattr(report, name) for name in _REPORT_FIELDS))
    return header, row
