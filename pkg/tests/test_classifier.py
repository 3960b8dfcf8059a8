import numpy as np
import pytest

from bci_arm.errors import ModelError
from bci_arm.features import NearestReferenceClassifier, extract_features
from bci_arm.features.classify import classify, train
from bci_arm.labels import BY_NAME
from bci_arm.signal import gen_synthetic, make_epochs, remove_dc


def _labeled_epochs(names, per_label, seed_base):
    out = []
    for name in names:
        label = BY_NAME[name]
        for k in range(per_label):
            samples = gen_synthetic(label, "quiet", 2.0, seed=seed_base + 100 * label.code + k)
            out.append((remove_dc(make_epochs(samples)[0]), label))
    return out


def _fit_direct(X, y):
    return NearestReferenceClassifier().fit(np.asarray(X), y)


def test_single_label_errors():
    with pytest.raises(ModelError, match="2 distinct labels"):
        train(_labeled_epochs(["push"], 3, 0))


def test_resubstitution_accuracy():
    data = _labeled_epochs(["push", "pull"], 10, 0)
    model = train(data)
    correct = sum(
        classify(model, extract_features(e))[0].name == lab.name for e, lab in data
    )
    assert correct / len(data) >= 0.9


def test_train_deterministic_bytes(tmp_path):
    data = _labeled_epochs(["push", "pull"], 5, 7)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    train(data).save(p1)
    train(data).save(p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_degenerate_nearest():
    X = np.vstack([np.zeros((5, 3)), np.full((5, 3), 10.0)])
    y = ["push"] * 5 + ["pull"] * 5
    m = _fit_direct(X, y)
    label, conf = classify(m, np.zeros(3))
    assert label.name == "push"
    assert conf > 0.5


def test_equidistant_confidence_half_lower_code_wins():
    X = np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0], [2.0, 2.0]])
    y = ["push", "push", "pull", "pull"]  # centroids (1,0) and (1,2)
    m = _fit_direct(X, y)
    label, conf = classify(m, np.array([1.0, 1.0]))
    assert label.name == "push"  # code 1 < code 2
    assert abs(conf - 0.5) < 1e-12


def test_confidence_sums_to_one():
    data = _labeled_epochs(["push", "pull", "lift"], 4, 3)
    model = train(data)
    fv = extract_features(data[0][0])
    proba = model.predict_proba(fv[None, :])[0]
    assert abs(proba.sum() - 1.0) < 1e-12


def test_dimension_mismatch_errors():
    m = _fit_direct(np.array([[0.0, 1.0], [1.0, 0.0]]), ["push", "pull"])
    with pytest.raises(ModelError, match="dimension"):
        classify(m, np.zeros(5))


def test_scale_invariance_of_decisions():
    base = _labeled_epochs(["push", "pull"], 8, 21)
    scaled = [(e.with_samples(3.7 * e.samples), lab) for e, lab in base]
    m1, m2 = train(base), train(scaled)
    test_base = _labeled_epochs(["push", "pull"], 4, 900)
    for e, _ in test_base:
        l1 = classify(m1, extract_features(e))[0]
        l2 = classify(m2, extract_features(e.with_samples(3.7 * e.samples)))[0]
        assert l1 == l2


def test_serialization_roundtrip(tmp_path):
    data = _labeled_epochs(["push", "pull", "lift", "drop"], 5, 13)
    model = train(data)
    path = tmp_path / "model.json"
    model.save(path)
    loaded = NearestReferenceClassifier.load(path)
    for e, _ in data:
        fv = extract_features(e)
        assert classify(model, fv) == classify(loaded, fv)


def test_unknown_version_rejected(tmp_path):
    p = tmp_path / "m.json"
    p.write_text('{"format": "bci-arm model v999"}')
    with pytest.raises(ModelError, match="format"):
        NearestReferenceClassifier.load(p)


def test_missing_model_file(tmp_path):
    with pytest.raises(ModelError, match="not found"):
        NearestReferenceClassifier.load(tmp_path / "no.json")
