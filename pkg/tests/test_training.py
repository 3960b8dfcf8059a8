import numpy as np
import pytest

from bci_arm.errors import BciArmError
from bci_arm.features import extract_features
from bci_arm.features.classify import classify
from bci_arm.labels import BY_NAME
from bci_arm.pipeline import SafetyConfig, label_epochs, preprocess_epoch, train_session
from bci_arm.signal import (
    EegEpoch,
    LabelInterval,
    gen_synthetic,
    gen_training_session,
    make_epochs,
    save_labels,
    save_session,
)

FOUR = [BY_NAME[n] for n in ("push", "pull", "move_left", "move_right")]


def write_session(tmp_path, labels, epochs_per_label=4, seed=0):
    samples, track = gen_training_session(labels, epochs_per_label, "quiet", seed)
    session = tmp_path / "session.csv"
    labels_path = tmp_path / "session.labels"
    save_session(samples, session)
    save_labels(track, labels_path)
    return session, labels_path


def test_label_epochs_max_overlap():
    epochs = [EegEpoch(float(2 * i), np.zeros((256, 5))) for i in range(4)]
    track = [LabelInterval(0.0, 4.0, "push"), LabelInterval(4.0, 8.0, "pull")]
    labeled = label_epochs(epochs, track)
    assert [lab.name for _, lab in labeled] == ["push", "push", "pull", "pull"]


def test_label_epochs_straddling_boundary():
    epochs = [EegEpoch(3.0, np.zeros((256, 5)))]  # 3..5: 1 s push, 1 s pull
    track = [LabelInterval(0.0, 4.0, "push"), LabelInterval(4.0, 8.0, "pull")]
    with pytest.raises(BciArmError, match="zero epochs"):
        # the tie resolves to one label; the other ends up uncovered
        label_epochs(epochs, track)


def test_label_epochs_missing_label_named():
    epochs = [EegEpoch(0.0, np.zeros((256, 5)))]
    track = [LabelInterval(0.0, 2.0, "push"), LabelInterval(100.0, 102.0, "pull")]
    with pytest.raises(BciArmError, match="pull"):
        label_epochs(epochs, track)


def test_epochs_outside_track_discarded():
    epochs = [EegEpoch(float(2 * i), np.zeros((256, 5))) for i in range(3)]
    track = [LabelInterval(0.0, 2.0, "push"), LabelInterval(2.0, 4.0, "pull")]
    labeled = label_epochs(epochs, track)
    assert len(labeled) == 2  # epoch at t=4 has no interval


def test_train_session_four_labels(tmp_path):
    session, labels_path = write_session(tmp_path, FOUR, seed=11)
    model_path = tmp_path / "model.json"
    model = train_session(session, labels_path, model_path)
    assert set(model.classes_) == {l.name for l in FOUR}
    assert model_path.exists()


def test_trained_model_decodes_heldout(tmp_path):
    session, labels_path = write_session(tmp_path, FOUR, seed=21)
    model = train_session(session, labels_path)
    correct = 0
    total = 0
    for label in FOUR:
        for k in range(3):
            samples = gen_synthetic(label, "quiet", 2.0, seed=7000 + 10 * label.code + k)
            limited, rejected, _ = preprocess_epoch(make_epochs(samples)[0], SafetyConfig())
            assert not rejected
            got, _ = classify(model, extract_features(limited))
            correct += got.name == label.name
            total += 1
    assert correct / total >= 0.8


def test_single_label_track_errors(tmp_path):
    session, labels_path = write_session(tmp_path, [BY_NAME["push"]], seed=5)
    with pytest.raises(BciArmError, match="at least 2"):
        train_session(session, labels_path)


def test_missing_session_errors(tmp_path):
    _, labels_path = write_session(tmp_path, FOUR, epochs_per_label=1, seed=3)
    with pytest.raises(BciArmError):
        train_session(tmp_path / "nope.csv", labels_path)


def test_training_deterministic(tmp_path):
    session, labels_path = write_session(tmp_path, FOUR, seed=31)
    p1, p2 = tmp_path / "m1.json", tmp_path / "m2.json"
    train_session(session, labels_path, p1)
    train_session(session, labels_path, p2)
    assert p1.read_bytes() == p2.read_bytes()
