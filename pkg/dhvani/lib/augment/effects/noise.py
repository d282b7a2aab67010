# -*- coding: utf-8 -*-
#
# This file is part of the Dhvani project.
# Copyright (C) 2025  Dhvani developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA
"""Additive pink and white background noise."""

import numpy as np
from scipy import signal

from dhvani.lib.audio_io import rms, scale_to_peak
from dhvani.lib.augment.effects import SEED_BOUND, BaseEffect

# 3-pole 1/f approximation applied to white noise.
PINK_B = [0.049922035, -0.095993537, 0.050612699, -0.004408786]
PINK_A = [1.0, -2.494956002, 2.017265875, -0.522189400]

#: Noise level used for silent segments, where an SNR is meaningless.
SILENCE_NOISE_DBFS = -40.0

NOISE_KINDS = ("white", "pink")


def gen_noise(n: int, kind: str, rng: np.random.Generator) -> np.ndarray:
    """
    Generate ``n`` samples of white or pink noise, peak-normalized to 1.0.

    White noise is i.i.d. uniform in [-1, 1]; pink noise is the same white
    noise shaped by a fixed recursive filter.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if kind not in NOISE_KINDS:
        raise ValueError(f"unknown noise kind {kind!r}")
    noise = rng.uniform(-1.0, 1.0, n)
    if kind == "pink":
        noise = signal.lfilter(PINK_B, PINK_A, noise)
    return scale_to_peak(noise, 1.0)


def mix_noise(seg: np.ndarray, noise: np.ndarray, snr_db: float) -> np.ndarray:
    """
    Add ``noise`` to ``seg`` scaled to the requested signal-to-noise ratio.

    An all-zero segment gets the noise at a fixed -40 dBFS RMS instead.

    Raises:
        ValueError: If the lengths differ.
    """
    if seg.shape != noise.shape:
        raise ValueError(f"length mismatch: {seg.shape[0]} != {noise.shape[0]}")
    noise_rms = rms(noise)
    if noise_rms == 0.0:
        return seg.copy()
    seg_rms = rms(seg)
    if seg_rms == 0.0:
        target = 10.0 ** (SILENCE_NOISE_DBFS / 20.0)
    else:
        target = seg_rms / 10.0 ** (snr_db / 20.0)
    return seg + noise * (target / noise_rms)


class NoiseEffect(BaseEffect):
    """Mix of pink and white noise at a random SNR."""

    name = "noise"
    order = 10
    probability = "p_noise"

    @classmethod
    def draw(cls, rng, cfg):
        return {
            "pink_weight": float(rng.uniform(0.0, 1.0)),
            "snr_db": float(rng.uniform(*cfg.snr_db)),
            "seed": int(rng.integers(SEED_BOUND)),
        }

    @classmethod
    def apply(cls, seg, params, fs):
        rng = np.random.default_rng(params["seed"])
        pink = gen_noise(seg.shape[0], "pink", rng)
        white = gen_noise(seg.shape[0], "white", rng)
        weight = params["pink_weight"]
        noise = scale_to_peak(weight * pink + (1.0 - weight) * white, 1.0)
        return mix_noise(seg, noise, params["snr_db"])
