import json
import math
from pathlib import Path

import pytest

from gazestudio.formats import (
    ScreenInfo,
    StudioFormatError,
    append_session_frame,
    frame_line,
    header_line,
    load_model,
    parse_model,
    write_session_header,
)

SCREEN = ScreenInfo(width_px=1920, height_px=1080, width_cm=34.4, height_cm=19.35,
                    view_distance_cm=60.0)

GOLDEN_MODEL = Path(__file__).parent / "golden" / "gaze.model"


def test_header_line_matches_documented_schema():
    obj = json.loads(header_line("alice", "s1", SCREEN))
    assert obj["record"] == "header"
    assert obj["format_version"] == 1
    assert obj["subject_id"] == "alice"
    assert obj["source"] == "live"
    assert obj["screen"]["width_px"] == 1920.0
    assert obj["screen"]["view_distance_cm"] == 60.0


def test_frame_line_carries_points_and_target():
    points = [(0.5, 0.5, 0.0)] * 478
    obj = json.loads(frame_line(12.5, points, (100.0, 200.0)))
    assert obj["record"] == "frame"
    assert obj["timestamp_ms"] == 12.5
    assert len(obj["points"]) == 478
    assert obj["points"][0] == [0.5, 0.5, 0.0]
    assert obj["target_px"] == [100.0, 200.0]


def test_frame_line_rejects_wrong_point_count():
    with pytest.raises(StudioFormatError):
        frame_line(0.0, [(0.5, 0.5, 0.0)] * 477, (0.0, 0.0))


def test_header_then_appends_build_a_session(tmp_path):
    path = tmp_path / "s.jsonl"
    write_session_header(path, "bob", "s2", SCREEN)
    append_session_frame(path, 0.0, [(0.5, 0.5, 0.0)] * 478, (5.0, 6.0))
    append_session_frame(path, 40.0, [(0.5, 0.5, 0.0)] * 478, (7.0, 8.0))
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert json.loads(lines[0])["record"] == "header"
    assert json.loads(lines[2])["target_px"] == [7.0, 8.0]


class TestModelParsing:
    def test_golden_model_loads(self):
        model = load_model(GOLDEN_MODEL)
        assert len(model["beta_x"]) == 5
        assert len(model["beta_y"]) == 5
        assert all(math.isfinite(b) for b in model["beta_x"] + model["beta_y"])

    def test_missing_coefficient(self):
        text = "\n".join(line for line in open(GOLDEN_MODEL).read().splitlines()
                         if not line.startswith("beta_y_4"))
        with pytest.raises(StudioFormatError):
            parse_model(text)

    def test_unsupported_version(self):
        text = open(GOLDEN_MODEL).read().replace("format_version = 1",
                                                 "format_version = 9")
        with pytest.raises(StudioFormatError):
            parse_model(text)

    def test_garbage(self):
        with pytest.raises(StudioFormatError):
            parse_model("!!! not a model !!!")
        with pytest.raises(StudioFormatError):
            parse_model("")

    def test_missing_file(self, tmp_path):
        with pytest.raises(StudioFormatError):
            load_model(tmp_path / "absent.model")
