import json

import numpy as np
import pytest

from bci_arm.cli import EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from bci_arm.pipeline import load_events


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fk_home_pose(capsys):
    code, out, _ = run(capsys, "fk", "0", "0", "0", "0", "0", "0")
    assert code == EXIT_OK
    lines = out.splitlines()
    pos = [float(v) for v in lines[0].split()[1:]]
    # upright arm: x = L4, z = L1 + L2 + L3
    assert np.allclose(pos, [60.0, 0.0, 305.0], atol=1e-6)
    assert lines[1].startswith("rotation:")


def test_fk_output_pipes_into_ik(capsys):
    code, out, _ = run(capsys, "fk", "25", "40", "-30", "10", "15", "0")
    assert code == EXIT_OK
    lines = out.splitlines()
    pos = lines[0].split()[1:]
    rot = lines[1].split()[1:]
    code, out, _ = run(capsys, "ik", *pos, *rot)
    assert code == EXIT_OK
    branches = [
        [float(v) for v in line.split()[1:]] for line in out.splitlines()
    ]
    best = min(np.max(np.abs(np.array(b) - [25, 40, -30, 10, 15, 0])) for b in branches)
    assert best < 1e-5


def test_ik_unreachable_exit_2(capsys):
    code, out, _ = run(capsys, "ik", "900", "0", "100")
    assert code == EXIT_DOMAIN
    assert "unreachable" in out


def test_ik_wrong_arity_exit_1(capsys):
    code, _, err = run(capsys, "ik", "1", "2", "3", "4")
    assert code == EXIT_USAGE


def test_missing_subcommand_exit_1(capsys):
    assert main([]) == EXIT_USAGE


def test_synth_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        code, _, _ = run(
            capsys, "synth", "--command", "push", "--duration", "4", "--seed", "7",
            "--out", str(out),
        )
        assert code == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_synth_unknown_label_exit_2(tmp_path, capsys):
    code, _, err = run(
        capsys, "synth", "--command", "teleport", "--out", str(tmp_path / "x.csv")
    )
    assert code == EXIT_DOMAIN
    assert "teleport" in err


def test_train_decode_roundtrip(tmp_path, capsys):
    session = tmp_path / "train.csv"
    code, _, _ = run(
        capsys, "synth", "--labels", "push,pull", "--epochs-per-label", "4",
        "--seed", "3", "--out", str(session),
    )
    assert code == EXIT_OK
    model = tmp_path / "model.json"
    code, out, _ = run(
        capsys, "train", "--session", str(session),
        "--labels", str(session) + ".labels", "--out", str(model),
    )
    assert code == EXIT_OK
    assert "2-class" in out

    live = tmp_path / "live.csv"
    run(capsys, "synth", "--command", "push", "--duration", "8", "--seed", "77",
        "--out", str(live))
    events_path = tmp_path / "events.log"
    code, out, _ = run(
        capsys, "decode", "--session", str(live), "--model", str(model),
        "--out", str(events_path),
    )
    assert code == EXIT_OK
    events = load_events(events_path)
    assert len(events) == 4
    assert all(e.label == "push" for e in events if e.gate != "rejected_epoch")


def test_decode_missing_model_exit_3(tmp_path, capsys):
    session = tmp_path / "s.csv"
    run(capsys, "synth", "--command", "push", "--duration", "2", "--out", str(session))
    code, _, err = run(
        capsys, "decode", "--session", str(session),
        "--model", str(tmp_path / "missing.json"), "--out", str(tmp_path / "e.log"),
    )
    assert code == EXIT_IO
    assert "not found" in err


def test_decode_missing_session_exit_3(tmp_path, capsys):
    model = tmp_path / "model.json"
    session = tmp_path / "t.csv"
    run(capsys, "synth", "--labels", "push,pull", "--epochs-per-label", "3",
        "--out", str(session))
    run(capsys, "train", "--session", str(session), "--labels", str(session) + ".labels",
        "--out", str(model))
    code, _, _ = run(
        capsys, "decode", "--session", str(tmp_path / "nope.csv"),
        "--model", str(model), "--out", str(tmp_path / "e.log"),
    )
    assert code == EXIT_IO


def test_script_prints_final_state(capsys):
    code, out, _ = run(capsys, "script", "pick_and_place")
    assert code == EXIT_OK
    lines = {l.split(":")[0]: l for l in out.splitlines() if ":" in l}
    joints = [float(v) for v in lines["final_joints"].split()[1:]]
    assert joints == [180.0, 90.0, 90.0, 90.0, 90.0, 90.0]
    pos = [float(v) for v in lines["final_position_mm"].split()[1:]]
    assert len(pos) == 3


def test_script_unknown_name_exit_2(capsys):
    code, _, err = run(capsys, "script", "does_not_exist")
    assert code == EXIT_DOMAIN


def test_config_flag_threads_through(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"kinematics": {"L1": 200.0}}))
    code, out, _ = run(capsys, "--config", str(cfg), "fk", "0", "0", "0", "0", "0", "0")
    assert code == EXIT_OK
    z = float(out.splitlines()[0].split()[3])
    assert abs(z - 405.0) < 1e-6


def test_bad_config_exit_2(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"safety": {"confidence_threshold": 7}}))
    code, _, err = run(capsys, "--config", str(cfg), "fk", "0", "0", "0", "0", "0", "0")
    assert code == EXIT_DOMAIN


def test_unknown_config_keys_warn_on_stderr(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"extra_section": {}}))
    code, _, err = run(capsys, "--config", str(cfg), "fk", "0", "0", "0", "0", "0", "0")
    assert code == EXIT_OK
    assert "extra_section" in err
