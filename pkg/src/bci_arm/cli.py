"""Command-line entry points.

    bci-arm fk T1 T2 T3 T4 T5 T6
    bci-arm ik PX PY PZ [R11 R12 R13 R21 R22 R23 R31 R32 R33]
    bci-arm synth --out FILE [--command NAME|rest | --labels a,b,...]
    bci-arm train --session FILE --labels FILE --out MODEL
    bci-arm decode --session FILE --model MODEL --out EVENTS
    bci-arm script NAME [--events FILE]
    bci-arm serve [--port N] [--model MODEL] [--no-realtime]

Exit codes: 0 success, 1 usage, 2 domain error (e.g. unreachable pose),
3 I/O or missing-file error.

`fk` prints `position_mm: x y z` and `rotation: r11 .. r33` (row-major);
`ik` accepts exactly that rotation order, so fk output pipes back into ik.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import load_config
from .errors import BciArmError, ConfigError, ModelError, SessionFormatError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3


def _fmt(values) -> str:
    return " ".join(f"{float(v):.9g}" for v in values)


def cmd_fk(args, config) -> int:
    from .kinematics import fk

    pose = fk(config.table, args.angles)
    print("position_mm:", _fmt(pose.position))
    print("rotation:", _fmt(pose.rotation.reshape(-1)))
    return EXIT_OK


def cmd_ik(args, config) -> int:
    import numpy as np

    from .kinematics import Pose, ik

    nums = args.numbers
    if len(nums) == 3:
        rotation = np.eye(3)
    elif len(nums) == 12:
        rotation = np.array(nums[3:]).reshape(3, 3)
    else:
        print("ik needs 3 numbers (position) or 12 (position + rotation)", file=sys.stderr)
        return EXIT_USAGE
    pose = Pose(rotation=rotation, position=np.array(nums[:3]))
    hint = args.theta5 if args.theta5 is not None else None
    sol = ik(config.table, pose, theta5_hint_deg=hint)
    if not sol.reachable:
        print("unreachable")
        return EXIT_DOMAIN
    print("elbow_up:", _fmt(sol.elbow_up))
    print("elbow_down:", _fmt(sol.elbow_down))
    return EXIT_OK


def cmd_synth(args, config) -> int:
    from .labels import parse_label
    from .signal import gen_synthetic, gen_training_session, save_labels, save_session

    if args.labels:
        names = [parse_label(n) for n in args.labels.split(",")]
        samples, track = gen_training_session(
            names, args.epochs_per_label, args.condition, args.seed
        )
        save_session(samples, args.out)
        track_path = args.label_track or str(args.out) + ".labels"
        save_labels(track, track_path)
        print(f"wrote {len(samples)} samples to {args.out}, labels to {track_path}")
        return EXIT_OK
    label = None if args.command in (None, "rest") else parse_label(args.command)
    samples = gen_synthetic(label, args.condition, args.duration, args.seed)
    save_session(samples, args.out)
    print(f"wrote {len(samples)} samples to {args.out}")
    return EXIT_OK


def cmd_train(args, config) -> int:
    from .pipeline import train_session

    model = train_session(args.session, args.labels, args.out, safety=config.safety)
    print(f"trained {len(model.classes_)}-class model -> {args.out}")
    return EXIT_OK


def cmd_decode(args, config) -> int:
    from .features import NearestReferenceClassifier
    from .pipeline import record_events, run_pipeline
    from .signal import load_session, make_epochs

    model = NearestReferenceClassifier.load(args.model)
    epochs = make_epochs(load_session(args.session))
    safety = config.safety
    if args.threshold is not None:
        import dataclasses

        safety = dataclasses.replace(safety, confidence_threshold=args.threshold)
    events, arm = run_pipeline(epochs, model, safety, config.make_arm(), _bindings())
    record_events(events, args.out)
    passed = sum(1 for e in events if e.gate == "passed")
    print(f"decoded {len(events)} epochs, {passed} commands passed -> {args.out}")
    return EXIT_OK


def cmd_script(args, config) -> int:
    from .pipeline import run_script

    script = config.scripts.get(args.name)
    if script is None:
        print(f"unknown script {args.name!r}", file=sys.stderr)
        return EXIT_DOMAIN
    trajectory = run_script(script, config.make_arm(), _bindings())
    final = trajectory[-1]
    print(f"script {args.name}: {len(trajectory)} states")
    print("final_joints:", _fmt(j.angle for j in final.joints))
    print("final_position_mm:", _fmt(final.pose.position))
    return EXIT_OK


def cmd_serve(args, config) -> int:
    import asyncio

    from .features import NearestReferenceClassifier
    from .service import serve

    model = NearestReferenceClassifier.load(args.model) if args.model else None
    try:
        asyncio.run(
            serve(
                config=config,
                model=model,
                host=args.host,
                port=args.port if args.port else None,
                realtime=not args.no_realtime,
            )
        )
    except KeyboardInterrupt:
        pass
    return EXIT_OK


def _bindings():
    from .arm import default_bindings

    return default_bindings()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bci-arm", description=__doc__)
    parser.add_argument("--config", type=Path, default=None, help="config JSON path")
    sub = parser.add_subparsers(dest="command_name", required=True)

    p = sub.add_parser("fk", help="forward kinematics of 6 joint angles (deg)")
    p.add_argument("angles", type=float, nargs=6)
    p.set_defaults(func=cmd_fk)

    p = sub.add_parser("ik", help="inverse kinematics of a pose")
    p.add_argument("numbers", type=float, nargs="+")
    p.add_argument("--theta5", type=float, default=None, help="override wrist roll (deg)")
    p.set_defaults(func=cmd_ik)

    p = sub.add_parser("synth", help="generate a synthetic session")
    p.add_argument("--command", default="rest")
    p.add_argument("--labels", default=None, help="comma list: labeled training blocks")
    p.add_argument("--epochs-per-label", type=int, default=10)
    p.add_argument("--condition", choices=["quiet", "noisy"], default="quiet")
    p.add_argument("--duration", type=float, default=20.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--label-track", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("train", help="fit a model from session + label track")
    p.add_argument("--session", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("decode", help="run the decode pipeline over a session")
    p.add_argument("--session", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threshold", type=float, default=None)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("script", help="run a named command script offline")
    p.add_argument("name")
    p.set_defaults(func=cmd_script)

    p = sub.add_parser("serve", help="run the live control service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--model", default=None)
    p.add_argument("--no-realtime", action="store_true")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = load_config(args.config)
        for warning in config.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        return args.func(args, config)
    except (SessionFormatError, ModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, BciArmError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
