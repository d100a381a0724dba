"""Synthetic landmark sessions from a rigid head + eyeball model.

A parametric skull (two inner eye corners, mid-eye point, nose bottom,
two eyeball centers, plus an ellipsoid shell of filler points) is posed
in front of a pinhole camera. For a known on-screen target the iris of
each eye is placed on the eyeball sphere along the eye-to-target ray and
four limbus points sit on a circle around it, perpendicular to that ray.
Everything projects to normalized image coordinates; depth is emitted as
weak-perspective relative depth (metric depth minus the face-centroid
depth, scaled by focal over centroid depth), matching the qualitative
behavior of real landmark producers.

All randomness is derived from the config seed, with pose/target draws
and coordinate noise on separate streams so runs at different noise
levels see identical geometry. Everything here is deterministic given
(config, session_index).

Camera frame: origin at the pinhole, +x right in the image, +y down,
+z into the scene. The screen lives in the z = screen_z_cm plane with
the camera above its top edge. The skull frame coincides with the
camera axes at zero yaw/pitch/roll; +x is the subject's anatomical left,
which lands on the right side of an (unmirrored) image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .descriptors import descriptor_vector
from .errors import PoseOutOfEnvelope, TargetBehindScreenPlane
from .landmarks import (
    BOTTOM_NOSE,
    LEFT_LIMBUS,
    LEFT_MCA,
    MID_EYES,
    NUM_LANDMARKS,
    RIGHT_LIMBUS,
    RIGHT_MCA,
    FrameLandmarks,
    validate_frame,
)
from .metrics import ScreenGeometry
from .regression import CalibrationSample

MAX_ABS_YAW_DEG = 30.0
MAX_ABS_PITCH_DEG = 30.0
MAX_ABS_ROLL_DEG = 15.0
MIN_DISTANCE_CM = 20.0
MAX_DISTANCE_CM = 200.0

_FRAME_INTERVAL_MS = 50.0


@dataclass(frozen=True)
class HeadPose:
    """Rigid head placement in camera coordinates (cm, degrees)."""

    position_cm: tuple[float, float, float]
    yaw_deg: float = 0.0
    pitch_deg: float = 0.0
    roll_deg: float = 0.0


@dataclass(frozen=True)
class HeadGeometry:
    """Skull-fixed coordinates (cm) of the modeled landmarks.

    Defaults are anthropometric ballpark; only internal consistency
    matters for the linear model, not absolute correctness.
    """

    left_mca: tuple[float, float, float] = (1.6, 0.0, 0.0)
    right_mca: tuple[float, float, float] = (-1.6, 0.0, 0.0)
    mid_eyes: tuple[float, float, float] = (0.0, -0.6, -0.5)
    bottom_nose: tuple[float, float, float] = (0.0, 4.5, -1.5)
    left_eye_center: tuple[float, float, float] = (2.3, 0.0, 0.6)
    right_eye_center: tuple[float, float, float] = (-2.3, 0.0, 0.6)
    eyeball_radius_cm: float = 1.2
    limbus_radius_cm: float = 0.55

    def __post_init__(self):
        if not (self.eyeball_radius_cm > self.limbus_radius_cm > 0):
            raise ValueError("need eyeball radius > limbus radius > 0")
        gap = math.dist(self.left_mca, self.right_mca)
        if gap <= 0:
            raise ValueError("inner eye corners must be separated")


def _default_screen() -> ScreenGeometry:
    return ScreenGeometry(width_px=1920, height_px=1080,
                          width_cm=34.4, height_cm=19.35,
                          view_distance_cm=90.0)


@dataclass(frozen=True)
class SynthConfig:
    screen: ScreenGeometry = field(default_factory=_default_screen)
    focal: float = 0.9                      # pinhole focal, normalized units
    principal: tuple[float, float] = (0.5, 0.5)
    screen_offset_cm: tuple[float, float] = (-17.2, 1.0)  # top-left corner in camera frame
    screen_z_cm: float = 0.0                # panel plane, coplanar with camera by default
    head: HeadGeometry = field(default_factory=HeadGeometry)
    # Base distance keeps gaze angles small enough that the linear model is
    # a faithful approximation; closer heads work but fit less cleanly.
    base_head_position_cm: tuple[float, float, float] = (0.0, 3.0, 90.0)
    yaw_jitter_deg: float = 8.0             # total per-frame excursion stays within +/- this
    pitch_jitter_deg: float = 8.0
    roll_jitter_deg: float = 2.0
    position_jitter_cm: tuple[float, float, float] = (2.0, 1.0, 1.0)
    noise_sigma: float = 0.0                # additive per-coordinate, normalized units
    seed: int = 0
    frames_per_session: int = 20
    sessions: int = 3

    def __post_init__(self):
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be >= 0")
        if self.frames_per_session < 1 or self.sessions < 1:
            raise ValueError("need at least one frame and one session")


def _rotation(yaw_deg: float, pitch_deg: float, roll_deg: float) -> np.ndarray:
    """Skull-to-camera rotation: yaw about +y, then pitch about +x, then roll about +z."""
    cy, sy = math.cos(math.radians(yaw_deg)), math.sin(math.radians(yaw_deg))
    cp, sp = math.cos(math.radians(pitch_deg)), math.sin(math.radians(pitch_deg))
    cr, sr = math.cos(math.radians(roll_deg)), math.sin(math.radians(roll_deg))
    ry = np.array([[cy, 0.0, sy], [0.0, 1.0, 0.0], [-sy, 0.0, cy]])
    rx = np.array([[1.0, 0.0, 0.0], [0.0, cp, -sp], [0.0, sp, cp]])
    rz = np.array([[cr, -sr, 0.0], [sr, cr, 0.0], [0.0, 0.0, 1.0]])
    return rz @ rx @ ry


def screen_point_cm(target_px: tuple[float, float], cfg: SynthConfig) -> np.ndarray:
    """3D camera-frame position of a screen pixel."""
    u, v = target_px
    ox, oy = cfg.screen_offset_cm
    x = ox + u * (cfg.screen.width_cm / cfg.screen.width_px)
    y = oy + v * (cfg.screen.height_cm / cfg.screen.height_px)
    return np.array([x, y, cfg.screen_z_cm])


def _check_envelope(pose: HeadPose):
    z = pose.position_cm[2]
    if not (MIN_DISTANCE_CM <= z <= MAX_DISTANCE_CM):
        raise PoseOutOfEnvelope(f"distance {z} cm outside [{MIN_DISTANCE_CM}, {MAX_DISTANCE_CM}]")
    if abs(pose.yaw_deg) > MAX_ABS_YAW_DEG or abs(pose.pitch_deg) > MAX_ABS_PITCH_DEG:
        raise PoseOutOfEnvelope(f"yaw/pitch ({pose.yaw_deg}, {pose.pitch_deg}) beyond +/-30 deg")
    if abs(pose.roll_deg) > MAX_ABS_ROLL_DEG:
        raise PoseOutOfEnvelope(f"roll {pose.roll_deg} beyond +/-15 deg")


def _filler_shell(head: HeadGeometry, count: int) -> np.ndarray:
    """Deterministic skull-fixed filler points on an ellipsoid shell.

    They exist only so frames carry the full landmark count; descriptor
    code never reads them.
    """
    k = np.arange(count, dtype=np.float64)
    golden = math.pi * (3.0 - math.sqrt(5.0))
    z = 1.0 - 2.0 * (k + 0.5) / count
    r = np.sqrt(1.0 - z * z)
    theta = golden * k
    unit = np.column_stack([r * np.cos(theta), r * np.sin(theta), z])
    semi_axes = np.array([6.5, 8.5, 7.0])
    center = np.array([0.0, 2.0, 3.0])
    return unit * semi_axes + center


def _limbus_ring(iris: np.ndarray, gaze_dir: np.ndarray, radius: float) -> np.ndarray:
    down = np.array([0.0, 1.0, 0.0])
    u = np.cross(gaze_dir, down)
    norm = np.linalg.norm(u)
    if norm < 1e-9:
        raise TargetBehindScreenPlane("gaze ray parallel to the vertical axis")
    u /= norm
    v = np.cross(gaze_dir, u)
    return np.array([iris + radius * u, iris + radius * v,
                     iris - radius * u, iris - radius * v])


def synth_frame(pose: HeadPose, target_px: tuple[float, float], cfg: SynthConfig,
                noise_rng: np.random.Generator | None = None,
                timestamp_ms: float = 0.0,
                session_id: str = "synthetic") -> tuple[FrameLandmarks, CalibrationSample]:
    """Generate one labeled frame for a head pose fixating target_px.

    Raises PoseOutOfEnvelope outside the generator's valid pose range and
    TargetBehindScreenPlane when the target is not in front of the eyes.
    """
    _check_envelope(pose)
    target = screen_point_cm(target_px, cfg)

    rot = _rotation(pose.yaw_deg, pose.pitch_deg, pose.roll_deg)
    pos = np.asarray(pose.position_cm, dtype=np.float64)

    def place(p_skull) -> np.ndarray:
        return rot @ np.asarray(p_skull, dtype=np.float64) + pos

    head = cfg.head
    points_cm = np.empty((NUM_LANDMARKS, 3), dtype=np.float64)
    modeled = {
        LEFT_MCA: place(head.left_mca),
        RIGHT_MCA: place(head.right_mca),
        MID_EYES: place(head.mid_eyes),
        BOTTOM_NOSE: place(head.bottom_nose),
    }

    for side_limbus, eye_skull in ((LEFT_LIMBUS, head.left_eye_center),
                                   (RIGHT_LIMBUS, head.right_eye_center)):
        eye = place(eye_skull)
        if target[2] >= eye[2] - 1.0:
            raise TargetBehindScreenPlane(
                f"target plane z={target[2]:.1f} cm is not in front of the eye at z={eye[2]:.1f} cm")
        ray = target - eye
        gaze_dir = ray / np.linalg.norm(ray)
        iris = eye + head.eyeball_radius_cm * gaze_dir
        ring = _limbus_ring(iris, gaze_dir, head.limbus_radius_cm)
        for idx, point in zip(side_limbus, ring):
            modeled[idx] = point

    filler_indices = [i for i in range(NUM_LANDMARKS) if i not in modeled]
    shell = _filler_shell(head, len(filler_indices))
    points_cm[filler_indices] = shell @ rot.T + pos
    for idx, point in modeled.items():
        points_cm[idx] = point

    # Pinhole projection plus weak-perspective relative depth.
    fx = cfg.focal
    px, py = cfg.principal
    zs = points_cm[:, 2]
    centroid_z = float(np.mean(zs))
    img = np.empty_like(points_cm)
    img[:, 0] = px + fx * points_cm[:, 0] / zs
    img[:, 1] = py + fx * points_cm[:, 1] / zs
    img[:, 2] = fx * (zs - centroid_z) / centroid_z

    if cfg.noise_sigma > 0:
        rng = noise_rng if noise_rng is not None else np.random.default_rng(cfg.seed)
        img = img + rng.normal(0.0, cfg.noise_sigma, size=img.shape)

    frame = validate_frame(img, timestamp_ms=timestamp_ms)
    sample = CalibrationSample(descriptor=descriptor_vector(frame),
                               target_px=(float(target_px[0]), float(target_px[1])),
                               session_id=session_id)
    return frame, sample


def _session_rngs(cfg: SynthConfig, session_index: int) -> tuple[np.random.Generator, np.random.Generator]:
    # Separate streams so pose/target draws are identical across noise levels.
    content = np.random.default_rng(np.random.SeedSequence([cfg.seed, session_index, 0]))
    noise = np.random.default_rng(np.random.SeedSequence([cfg.seed, session_index, 1]))
    return content, noise


def synth_session(cfg: SynthConfig, session_index: int) -> list[tuple[FrameLandmarks, CalibrationSample]]:
    """Generate one session: uniformly random on-screen targets with small
    head-pose perturbations around a session-specific base pose.

    Deterministic per (cfg.seed, session_index).
    """
    content_rng, noise_rng = _session_rngs(cfg, session_index)
    half = 0.5
    base_yaw = content_rng.uniform(-half * cfg.yaw_jitter_deg, half * cfg.yaw_jitter_deg)
    base_pitch = content_rng.uniform(-half * cfg.pitch_jitter_deg, half * cfg.pitch_jitter_deg)
    base_roll = content_rng.uniform(-half * cfg.roll_jitter_deg, half * cfg.roll_jitter_deg)
    jitter = np.asarray(cfg.position_jitter_cm, dtype=np.float64)
    base_pos = np.asarray(cfg.base_head_position_cm, dtype=np.float64) + \
        content_rng.uniform(-jitter, jitter)

    session_id = f"synthetic-{session_index}"
    out = []
    for i in range(cfg.frames_per_session):
        pose = HeadPose(
            position_cm=tuple(base_pos + content_rng.uniform(-jitter / 4.0, jitter / 4.0)),
            yaw_deg=base_yaw + content_rng.uniform(-half * cfg.yaw_jitter_deg, half * cfg.yaw_jitter_deg),
            pitch_deg=base_pitch + content_rng.uniform(-half * cfg.pitch_jitter_deg, half * cfg.pitch_jitter_deg),
            roll_deg=base_roll + content_rng.uniform(-half * cfg.roll_jitter_deg, half * cfg.roll_jitter_deg),
        )
        target = (content_rng.uniform(0.0, cfg.screen.width_px),
                  content_rng.uniform(0.0, cfg.screen.height_px))
        out.append(synth_frame(pose, target, cfg, noise_rng=noise_rng,
                               timestamp_ms=i * _FRAME_INTERVAL_MS,
                               session_id=session_id))
    return out
