"""Command-line pipeline: synthesize, calibrate, evaluate, predict, export.

Exit codes: 0 success, 1 usage error, 2 data/validation error,
3 numerical error (rank deficiency, too few samples, degenerate frames
under fail-fast). Every run is deterministic given its flags and inputs.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace
from pathlib import Path

from .descriptors import descriptor_vector
from .errors import DegenerateGeometry, GazeKitError, IoFailure, NumericalError, ValidationError
from .metrics import ScreenGeometry, evaluate, report_csv_row, report_document
from .regression import deserialize_model, fit, serialize_model
from .session_io import (
    SessionHeader,
    export_descriptors,
    read_session,
    session_samples,
    write_session,
)
from .synth import HeadGeometry, SynthConfig, synth_session

USAGE_ERROR = 1
DATA_ERROR = 2
NUMERICAL_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; the contract here reserves 2 for
    # data errors, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gazekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calibrate", help="fit a gaze model from labeled sessions")
    p.add_argument("--sessions", nargs="+", required=True, metavar="PATH")
    p.add_argument("--out", required=True, metavar="MODEL_PATH")

    p = sub.add_parser("eval", help="score a model against a labeled session")
    p.add_argument("--model", required=True)
    p.add_argument("--session", required=True)
    p.add_argument("--view-distance-cm", type=float, default=None,
                   help="override the session header's viewing distance")
    p.add_argument("--report", default=None, help="also write the report document here")
    p.add_argument("--report-csv", default=None, help="also write a flat CSV row here")
    p.add_argument("--on-degenerate", choices=("skip", "fail"), default="skip")

    p = sub.add_parser("predict", help="per-frame predictions as CSV")
    p.add_argument("--model", required=True)
    p.add_argument("--session", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("synth", help="generate synthetic calibration sessions")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--config", default=None, help="JSON config file (see README)")
    p.add_argument("--sessions", type=int, default=None)
    p.add_argument("--frames", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--noise-sigma", type=float, default=None)

    p = sub.add_parser("export-descriptors", help="descriptor matrix as CSV")
    p.add_argument("--session", required=True)
    p.add_argument("--out", required=True)

    return parser


def _load_synth_config(args) -> SynthConfig:
    cfg = SynthConfig()
    if args.config is not None:
        try:
            raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except OSError as exc:
            raise IoFailure(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValidationError(f"config is not valid JSON: {exc}") from exc
        try:
            if "screen" in raw:
                raw["screen"] = ScreenGeometry(**raw["screen"])
            if "head" in raw:
                head = {k: tuple(v) if isinstance(v, list) else v
                        for k, v in raw["head"].items()}
                raw["head"] = HeadGeometry(**head)
            for key in ("principal", "screen_offset_cm", "base_head_position_cm",
                        "position_jitter_cm"):
                if key in raw:
                    raw[key] = tuple(raw[key])
            cfg = replace(cfg, **raw)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"bad synth config: {exc}") from exc
    overrides = {}
    if args.sessions is not None:
        overrides["sessions"] = args.sessions
    if args.frames is not None:
        overrides["frames_per_session"] = args.frames
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.noise_sigma is not None:
        overrides["noise_sigma"] = args.noise_sigma
    if overrides:
        try:
            cfg = replace(cfg, **overrides)
        except ValueError as exc:
            raise ValidationError(f"bad synth config: {exc}") from exc
    return cfg


def _pooled_samples(paths, on_degenerate: str = "skip"):
    samples = []
    skipped = 0
    for path in paths:
        header, records = read_session(path)
        got, bad = session_samples(records, session_id=header.session_id,
                                   on_degenerate=on_degenerate)
        samples.extend(got)
        skipped += bad
    return samples, skipped


def _cmd_calibrate(args) -> int:
    samples, skipped = _pooled_samples(args.sessions)
    model = fit(samples)
    Path(args.out).write_text(serialize_model(model), encoding="utf-8")
    info = model.fit_info
    print(f"fitted {info.sample_count} samples ({skipped} skipped)")
    print(f"residual_rms_x = {info.residual_rms_x!r}")
    print(f"residual_rms_y = {info.residual_rms_y!r}")
    print(f"condition_x = {info.condition_x!r}")
    print(f"condition_y = {info.condition_y!r}")
    print(f"model written to {args.out}")
    return 0


def _read_model(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read model file {path}: {exc}") from exc
    return deserialize_model(text)


def _cmd_eval(args) -> int:
    model = _read_model(args.model)
    header, records = read_session(args.session)
    geom = header.screen
    if args.view_distance_cm is not None:
        geom = ScreenGeometry(width_px=geom.width_px, height_px=geom.height_px,
                              width_cm=geom.width_cm, height_cm=geom.height_cm,
                              view_distance_cm=args.view_distance_cm)
    samples, skipped = session_samples(records, session_id=header.session_id,
                                       on_degenerate=args.on_degenerate)
    report = evaluate(model, samples, geom, skipped=skipped)
    sys.stdout.write(report_document(report))
    if args.report is not None:
        Path(args.report).write_text(report_document(report), encoding="utf-8")
    if args.report_csv is not None:
        head, row = report_csv_row(report)
        Path(args.report_csv).write_text(head + "\n" + row + "\n", encoding="utf-8")
    return 0


def _cmd_predict(args) -> int:
    from .regression import predict

    model = _read_model(args.model)
    _, records = read_session(args.session)
    skipped = 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["timestamp_ms", "u_pred", "v_pred", "u_true", "v_true"])
            for frame, target in records:
                try:
                    d = descriptor_vector(frame)
                except DegenerateGeometry:
                    skipped += 1
                    continue
                u, v = predict(model, d)
                row = [repr(frame.timestamp_ms), repr(u), repr(v)]
                row += [repr(target[0]), repr(target[1])] if target is not None else ["", ""]
                writer.writerow(row)
    except OSError as exc:
        raise IoFailure(f"cannot write predictions {args.out}: {exc}") from exc
    print(f"predictions written to {args.out} ({skipped} frames skipped)")
    return 0


def _cmd_synth(args) -> int:
    cfg = _load_synth_config(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for index in range(1, cfg.sessions + 1):
        pairs = synth_session(cfg, index)
        header = SessionHeader(subject_id="synthetic", session_id=f"synthetic-{index}",
                               screen=cfg.screen, source="synthetic")
        path = out_dir / f"session_{index}.jsonl"
        write_session(header, ((frame, sample.target_px) for frame, sample in pairs), path)
        print(f"wrote {path} ({cfg.frames_per_session} frames)")
    return 0


def _cmd_export_descriptors(args) -> int:
    skipped = export_descriptors(args.session, args.out)
    print(f"descriptors written to {args.out} ({skipped} frames skipped)")
    return 0


_COMMANDS = {
    "calibrate": _cmd_calibrate,
    "eval": _cmd_eval,
    "predict": _cmd_predict,
    "synth": _cmd_synth,
    "export-descriptors": _cmd_export_descriptors,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return _COMMANDS[args.command](args)
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    except (ValidationError, IoFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except GazeKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
