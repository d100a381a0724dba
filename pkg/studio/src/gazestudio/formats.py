"""The gazekit on-disk contracts, re-implemented from their documentation.

The studio deliberately does not import the core package; it speaks the
session-file and model-file formats as documented in the core README.
Session files are line-delimited JSON (header first, then one frame
record per click); model files are versioned `key = value` text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

SESSION_FORMAT_VERSION = 1
MODEL_FORMAT_VERSION = 1
NUM_LANDMARKS = 478


class StudioFormatError(Exception):
    """Model or session document does not match the documented contract."""


@dataclass(frozen=True)
class ScreenInfo:
    width_px: float
    height_px: float
    width_cm: float
    height_cm: float
    view_distance_cm: float


def header_line(subject_id: str, session_id: str, screen: ScreenInfo,
                source: str = "live") -> str:
    return json.dumps({
        "record": "header",
        "format_version": SESSION_FORMAT_VERSION,
        "subject_id": subject_id,
        "session_id": session_id,
        "screen": {
            "width_px": float(screen.width_px),
            "height_px": float(screen.height_px),
            "width_cm": float(screen.width_cm),
            "height_cm": float(screen.height_cm),
            "view_distance_cm": float(screen.view_distance_cm),
        },
        "source": source,
    }, separators=(",", ":"))


def frame_line(timestamp_ms: float, points, target_px=None) -> str:
    pts = [[float(p[0]), float(p[1]), float(p[2])] for p in points]
    if len(pts) != NUM_LANDMARKS:
        raise StudioFormatError(f"frame must carry {NUM_LANDMARKS} points, got {len(pts)}")
    obj = {"record": "frame", "timestamp_ms": float(timestamp_ms), "points": pts}
    if target_px is not None:
        obj["target_px"] = [float(target_px[0]), float(target_px[1])]
    return json.dumps(obj, separators=(",", ":"))


def write_session_header(path, subject_id: str, session_id: str,
                         screen: ScreenInfo, source: str = "live") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(header_line(subject_id, session_id, screen, source) + "\n")


def append_session_frame(path, timestamp_ms: float, points, target_px) -> None:
    with open(path, "a", encoding="utf-8", newline="\n") as f:
        f.write(frame_line(timestamp_ms, points, target_px) + "\n")


def parse_model(text: str) -> dict:
    """Parse a gaze-model document into {'beta_x': [...5], 'beta_y': [...5]}.

    Raises StudioFormatError on anything that does not match the
    documented model format.
    """
    fields = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if "=" not in line:
            raise StudioFormatError(f"not a key = value line: {line!r}")
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()

    version = fields.get("format_version")
    if version is None:
        raise StudioFormatError("model file is missing format_version")
    if version != str(MODEL_FORMAT_VERSION):
        raise StudioFormatError(f"unsupported model format version {version}")

    def beta(axis: str) -> list[float]:
        out = []
        for i in range(5):
            key = f"beta_{axis}_{i}"
            if key not in fields:
                raise StudioFormatError(f"model file is missing {key}")
            try:
                out.append(float(fields[key]))
            except ValueError as exc:
                raise StudioFormatError(f"{key} is not a number") from exc
        return out

    return {"beta_x": beta("x"), "beta_y": beta("y")}


def load_model(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return parse_model(f.read())
    except OSError as exc:
        raise StudioFormatError(f"cannot read model file {path}: {exc}") from exc
