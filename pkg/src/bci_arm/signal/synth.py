"""Deterministic synthetic 5-channel EEG with motor-imagery structure.

Each channel is 1/f-shaped background noise plus an Alpha (10 Hz) and a
Beta (19 Hz) oscillator. While a command is active the Alpha amplitude is
suppressed (desynchronization) and the Beta amplitude is boosted
(synchronization); each of the 12 commands boosts/suppresses a distinct
channel pair, which makes the commands linearly separable in band-energy
features. The noisy condition adds a uniform high-Beta (27 Hz) component
on every channel. The same (seed, arguments) always produce the same
stream, bit for bit.
"""
from __future__ import annotations

import numpy as np

from ..errors import BciArmError
from ..labels import LABELS, CommandLabel
from .bands import EPOCH_SAMPLES, EPOCH_SECONDS, FS_HZ, N_CHANNELS
from .session import EegSample, LabelInterval

NOISE_RMS_UV = 6.0
ALPHA_AMP_UV = 20.0
BETA_AMP_UV = 8.0
HIGH_BETA_AMP_UV = 6.0
ALPHA_HZ = 10.0
BETA_HZ = 19.0
HIGH_BETA_HZ = 27.0

# Baseline modulation applied on every channel during any command, plus a
# command-specific focus channel for each band. Focus channel pairs are
# unique across the 12 codes.
ALPHA_DEPTH_BASE = 0.35
ALPHA_DEPTH_FOCUS = 0.45
BETA_GAIN_BASE = 0.4
BETA_GAIN_FOCUS = 1.6


def command_signature(label: CommandLabel) -> tuple[int, int]:
    """(beta focus channel, alpha focus channel) for one command code."""
    idx = label.code - 1
    beta_ch = idx % N_CHANNELS
    tier = idx // N_CHANNELS
    alpha_ch = (beta_ch + 1 + tier) % N_CHANNELS
    return beta_ch, alpha_ch


def _pink_noise(rng: np.random.Generator, n: int) -> np.ndarray:
    """1/f-amplitude noise of length n, unit RMS."""
    freqs = np.fft.rfftfreq(n, d=1.0 / FS_HZ)
    shape = np.zeros_like(freqs)
    shape[1:] = 1.0 / np.sqrt(np.maximum(freqs[1:], 1.0))
    phases = rng.normal(size=freqs.size) + 1j * rng.normal(size=freqs.size)
    spectrum = shape * phases
    spectrum[0] = 0.0
    x = np.fft.irfft(spectrum, n=n)
    return x / np.sqrt(np.mean(x**2))


def gen_synthetic(
    command: CommandLabel | None,
    condition: str,
    duration_s: float,
    seed: int,
    t_offset: float = 0.0,
) -> list[EegSample]:
    """Generate a stream of samples; command=None means rest."""
    if condition not in ("quiet", "noisy"):
        raise BciArmError(f"unknown condition {condition!r}")
    if duration_s < EPOCH_SECONDS:
        raise BciArmError("duration must cover at least one 2 s epoch")
    n = int(round(duration_s * FS_HZ))
    rng = np.random.default_rng(seed)

    depth = np.zeros(N_CHANNELS)
    gain = np.zeros(N_CHANNELS)
    if command is not None:
        beta_ch, alpha_ch = command_signature(command)
        depth[:] = ALPHA_DEPTH_BASE
        depth[alpha_ch] += ALPHA_DEPTH_FOCUS
        gain[:] = BETA_GAIN_BASE
        gain[beta_ch] += BETA_GAIN_FOCUS

    t = np.arange(n) / FS_HZ
    data = np.empty((n, N_CHANNELS))
    for ch in range(N_CHANNELS):
        noise = NOISE_RMS_UV * _pink_noise(rng, n)
        phase_a, phase_b, phase_hb = rng.uniform(0, 2 * np.pi, size=3)
        x = noise
        x = x + ALPHA_AMP_UV * (1.0 - depth[ch]) * np.sin(2 * np.pi * ALPHA_HZ * t + phase_a)
        x = x + BETA_AMP_UV * (1.0 + gain[ch]) * np.sin(2 * np.pi * BETA_HZ * t + phase_b)
        if condition == "noisy":
            x = x + HIGH_BETA_AMP_UV * np.sin(2 * np.pi * HIGH_BETA_HZ * t + phase_hb)
        data[:, ch] = x

    return [
        EegSample(float(t_offset + i / FS_HZ), tuple(float(v) for v in data[i]))
        for i in range(n)
    ]


def gen_training_session(
    labels: list[CommandLabel],
    epochs_per_label: int,
    condition: str,
    seed: int,
) -> tuple[list[EegSample], list[LabelInterval]]:
    """Concatenate one labeled block per command into a session + track.

    Block seeds are spawned from the master seed, so the whole session is
    reproducible and block contents are independent.
    """
    if epochs_per_label < 1:
        raise BciArmError("need at least one epoch per label")
    children = np.random.SeedSequence(seed).spawn(len(labels))
    samples: list[EegSample] = []
    track: list[LabelInterval] = []
    t0 = 0.0
    block_s = epochs_per_label * EPOCH_SECONDS
    for label, child in zip(labels, children):
        block_seed = int(child.generate_state(1)[0])
        samples.extend(gen_synthetic(label, condition, block_s, block_seed, t_offset=t0))
        track.append(LabelInterval(t0, t0 + block_s, label.name))
        t0 += block_s
    return samples, track
