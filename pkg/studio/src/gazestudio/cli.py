"""gazestudio: capture click-labeled calibration sessions and preview gaze.

Session and model files follow the gazekit formats; a session captured
here feeds `gazekit calibrate` directly.
"""

from __future__ import annotations

import argparse
import sys

from .app import CalibrationApp, LiveApp
from .capture import NoCamera, OpenCVCamera, mediapipe_producer
from .formats import ScreenInfo, StudioFormatError


def probe_screen(width_cm=None, height_cm=None, view_distance_cm=60.0) -> ScreenInfo:
    """Display resolution (and physical size when the system reports it).

    Monitors frequently misreport their physical size; pass --width-cm and
    --height-cm to override.
    """
    import tkinter

    root = tkinter.Tk()
    root.withdraw()
    width_px = float(root.winfo_screenwidth())
    height_px = float(root.winfo_screenheight())
    probed_w_cm = root.winfo_screenmmwidth() / 10.0
    probed_h_cm = root.winfo_screenmmheight() / 10.0
    root.destroy()
    return ScreenInfo(
        width_px=width_px,
        height_px=height_px,
        width_cm=float(width_cm) if width_cm else probed_w_cm,
        height_cm=float(height_cm) if height_cm else probed_h_cm,
        view_distance_cm=float(view_distance_cm),
    )


def _add_common(p):
    p.add_argument("--camera-index", type=int, default=0)
    p.add_argument("--width-cm", type=float, default=None,
                   help="physical screen width; overrides the probed value")
    p.add_argument("--height-cm", type=float, default=None)
    p.add_argument("--view-distance-cm", type=float, default=60.0)
    p.add_argument("--landmark-variant", choices=("attention", "basic"),
                   default="attention")


def _build_parser():
    parser = argparse.ArgumentParser(prog="gazestudio", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calibrate", help="capture a click-labeled session")
    p.add_argument("--out", required=True, metavar="SESSION_PATH")
    p.add_argument("--subject-id", default="subject")
    p.add_argument("--session-id", default="studio-session")
    p.add_argument("--clicks", type=int, default=20)
    _add_common(p)

    p = sub.add_parser("live", help="overlay live gaze predictions")
    p.add_argument("--model", required=True)
    _add_common(p)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        screen = probe_screen(args.width_cm, args.height_cm, args.view_distance_cm)
    except Exception as exc:
        print(f"error: cannot probe the display ({exc}); "
              "pass --width-cm/--height-cm on a headless setup", file=sys.stderr)
        return 2

    from .surface import OpenCVSurface

    try:
        producer = mediapipe_producer(args.landmark_variant)
        camera = OpenCVCamera(args.camera_index)
    except (NoCamera, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "calibrate":
            app = CalibrationApp(camera, producer, OpenCVSurface(), args.out, screen,
                                 subject_id=args.subject_id, session_id=args.session_id,
                                 clicks_target=args.clicks)
            captured = app.run()
            print(f"captured {captured} clicks into {args.out}")
            return 0
        app = LiveApp(camera, producer, OpenCVSurface(), args.model, screen)
        app.run()
        return 0
    except StudioFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        camera.release()


if __name__ == "__main__":
    sys.exit(main())
