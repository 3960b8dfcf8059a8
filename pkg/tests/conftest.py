import re

import numpy as np
import pytest

from bci_arm.signal import EPOCH_SAMPLES, FS_HZ, N_CHANNELS, EegEpoch


def epoch_from_waveform(wave: np.ndarray, start_t: float = 0.0) -> EegEpoch:
    """Same 256-sample waveform on all 5 channels."""
    assert wave.shape == (EPOCH_SAMPLES,)
    return EegEpoch(start_t=start_t, samples=np.tile(wave[:, None], (1, N_CHANNELS)))


def sine_epoch(freq_hz: float, amp_uv: float = 1.0, phase: float = 0.0) -> EegEpoch:
    t = np.arange(EPOCH_SAMPLES) / FS_HZ
    return epoch_from_waveform(amp_uv * np.sin(2 * np.pi * freq_hz * t + phase))


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def random_epoch(rng):
    return EegEpoch(start_t=0.0, samples=rng.normal(0, 10, size=(EPOCH_SAMPLES, N_CHANNELS)))


_CRITERION = re.compile(r"test_acceptance\.py::test_(a\d+)_")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(report, "nodeid", ""))
            if m:
                results[m.group(1).upper()] = "PASS" if outcome == "passed" else "FAIL"
    if results:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for crit in sorted(results):
            terminalreporter.write_line(f"  {crit}: {results[crit]}")
