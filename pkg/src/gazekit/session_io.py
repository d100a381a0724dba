"""Line-delimited session files and descriptor export.

A session file is UTF-8 text, one self-describing JSON object per line:
a header record first, then one record per captured frame. The format is
append-friendly (a live capture tool writes the header, then one line per
click) and human-inspectable. Coordinates serialize through repr-exact
decimals, so write -> read is bit-exact and canonical re-writes are
byte-identical.

Parsing is streaming: records are validated and yielded one at a time,
never buffering the whole file, and every failure carries the offending
line number.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .descriptors import descriptor_vector
from .errors import (
    DegenerateGeometry,
    FrameValidation,
    IoFailure,
    MalformedRecord,
    MissingHeader,
    ValidationError,
    VersionMismatch,
)
from .landmarks import NUM_LANDMARKS, FrameLandmarks, validate_frame
from .metrics import ScreenGeometry
from .regression import CalibrationSample

SESSION_FORMAT_VERSION = 1

DESCRIPTOR_COLUMNS = ("r_y", "r_x", "w_f", "h_f", "me_x", "me_y", "pp_x", "pp_y")

SessionRecord = tuple[FrameLandmarks, Optional[tuple[float, float]]]


@dataclass(frozen=True)
class SessionHeader:
    subject_id: str
    session_id: str
    screen: ScreenGeometry
    source: str = "live"  # "live" | "synthetic"
    format_version: int = SESSION_FORMAT_VERSION


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def encode_header(header: SessionHeader) -> str:
    """Canonical single-line JSON for the header record."""
    screen = header.screen
    return _dump({
        "record": "header",
        "format_version": header.format_version,
        "subject_id": header.subject_id,
        "session_id": header.session_id,
        "screen": {
            "width_px": screen.width_px,
            "height_px": screen.height_px,
            "width_cm": screen.width_cm,
            "height_cm": screen.height_cm,
            "view_distance_cm": screen.view_distance_cm,
        },
        "source": header.source,
    })


def encode_record(frame: FrameLandmarks, target_px: Optional[tuple[float, float]]) -> str:
    """Canonical single-line JSON for one frame record."""
    obj: dict = {
        "record": "frame",
        "timestamp_ms": frame.timestamp_ms,
        "points": [[float(x), float(y), float(z)] for x, y, z in frame.points],
    }
    if target_px is not None:
        obj["target_px"] = [float(target_px[0]), float(target_px[1])]
    return _dump(obj)


def write_session(header: SessionHeader, records: Iterable[SessionRecord], path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(encode_header(header) + "\n")
            for frame, target in records:
                f.write(encode_record(frame, target) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write session file {path}: {exc}") from exc


def append_record(path, frame: FrameLandmarks, target_px: Optional[tuple[float, float]]) -> None:
    """Append one frame record to an existing session file."""
    try:
        with open(path, "a", encoding="utf-8", newline="\n") as f:
            f.write(encode_record(frame, target_px) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot append to session file {path}: {exc}") from exc


def _parse_header(line: str) -> SessionHeader:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MissingHeader(f"header is not valid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict) or obj.get("record") != "header":
        raise MissingHeader()
    version = obj.get("format_version")
    if version != SESSION_FORMAT_VERSION:
        raise VersionMismatch(version)
    try:
        screen = obj["screen"]
        geometry = ScreenGeometry(
            width_px=float(screen["width_px"]),
            height_px=float(screen["height_px"]),
            width_cm=float(screen["width_cm"]),
            height_cm=float(screen["height_cm"]),
            view_distance_cm=float(screen["view_distance_cm"]),
        )
        return SessionHeader(
            subject_id=str(obj["subject_id"]),
            session_id=str(obj["session_id"]),
            screen=geometry,
            source=str(obj.get("source", "live")),
            format_version=int(version),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MissingHeader(f"invalid header fields: {exc}") from exc


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _parse_record(line: str, line_no: int) -> SessionRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON: {exc.msg}", line=line_no) from exc
    if not isinstance(obj, dict) or obj.get("record") != "frame":
        raise MalformedRecord("expected a frame record", line=line_no)

    timestamp = obj.get("timestamp_ms")
    if not _is_number(timestamp):
        raise MalformedRecord("missing or non-numeric timestamp_ms", line=line_no)

    points = obj.get("points")
    if not isinstance(points, list) or len(points) != NUM_LANDMARKS:
        count = len(points) if isinstance(points, list) else "no"
        raise MalformedRecord(f"expected {NUM_LANDMARKS} point triples, found {count}",
                              line=line_no)
    for triple in points:
        if not (isinstance(triple, list) and len(triple) == 3 and all(map(_is_number, triple))):
            raise MalformedRecord("each point must be a [x, y, z] number triple", line=line_no)

    target = None
    if "target_px" in obj and obj["target_px"] is not None:
        raw = obj["target_px"]
        if not (isinstance(raw, list) and len(raw) == 2 and all(map(_is_number, raw))
                and all(math.isfinite(v) for v in raw)):
            raise MalformedRecord("target_px must be a finite [u, v] pair", line=line_no)
        target = (float(raw[0]), float(raw[1]))

    try:
        frame = validate_frame(points, timestamp_ms=float(timestamp))
    except ValidationError as exc:
        raise FrameValidation(line_no, exc) from exc
    return frame, target


def read_session(path) -> tuple[SessionHeader, Iterator[SessionRecord]]:
    """Open a session file; returns the header and a lazy record iterator.

    Header problems (missing, malformed, wrong version) raise immediately;
    body problems raise from the iterator, each with its line number.
    """
    try:
        f = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot open session file {path}: {exc}") from exc

    first = f.readline()
    if not first.strip():
        f.close()
        raise MissingHeader("empty file")
    try:
        header = _parse_header(first)
    except Exception:
        f.close()
        raise

    def records() -> Iterator[SessionRecord]:
        with f:
            for line_no, line in enumerate(f, start=2):
                if not line.strip():
                    raise MalformedRecord("blank line", line=line_no)
                yield _parse_record(line, line_no)

    return header, records()


def session_samples(records: Iterable[SessionRecord], session_id: str = "",
                    on_degenerate: str = "skip") -> tuple[list[CalibrationSample], int]:
    """Build calibration samples from labeled records.

    Unlabeled frames are excluded by design. Degenerate frames are skipped
    and counted under the default policy; ``on_degenerate="fail"`` raises
    instead.
    """
    if on_degenerate not in ("skip", "fail"):
        raise ValueError(f"on_degenerate must be 'skip' or 'fail', got {on_degenerate!r}")
    samples: list[CalibrationSample] = []
    skipped = 0
    for frame, target in records:
        if target is None:
            continue
        try:
            descriptor = descriptor_vector(frame)
        except DegenerateGeometry:
            if on_degenerate == "fail":
                raise
            skipped += 1
            continue
        samples.append(CalibrationSample(descriptor=descriptor, target_px=target,
                                         session_id=session_id))
    return samples, skipped


def export_descriptors(session_path, out_path) -> int:
    """Write one CSV row of descriptors per frame; returns the skip count.

    Columns are the eight descriptors in fixed order, then target u, v
    (left empty for unlabeled frames). Degenerate frames are skipped and
    counted.
    """
    _, records = read_session(session_path)
    skipped = 0
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(list(DESCRIPTOR_COLUMNS) + ["target_u", "target_v"])
            for frame, target in records:
                try:
                    d = descriptor_vector(frame)
                except DegenerateGeometry:
                    skipped += 1
                    continue
                row = [repr(v) for v in d.as_tuple()]
                row += [repr(target[0]), repr(target[1])] if target is not None else ["", ""]
                writer.writerow(row)
    except OSError as exc:
        raise IoFailure(f"cannot write descriptor export {out_path}: {exc}") from exc
    return skipped
