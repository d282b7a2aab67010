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
"""
Reverberation by convolution with a synthetic room impulse response.

The response is exponentially decaying Gaussian noise behind a unit direct
path; its decay constant makes the energy drop by 60 dB after RT60 seconds.
"""

import numpy as np
from scipy import signal

from dhvani.lib.augment.config import RirSpec
from dhvani.lib.augment.effects import SEED_BOUND, BaseEffect

#: Responses longer than this are convolved through the FFT.
DIRECT_CONVOLUTION_MAX = 256

# ln(1000): amplitude falls by 60 dB over one RT60.
_DECAY_60DB = 6.908


def synth_rir(spec: RirSpec, rng: np.random.Generator) -> np.ndarray:
    """
    Synthesize a room impulse response of ``rt60_s * fs`` samples.

    ``h[n] = g[n] * exp(-6.908 * n / (fs * rt60))`` with Gaussian ``g``,
    ``h[0] = 1``; the tail is scaled down when needed so the direct path is
    the peak.
    """
    length = max(1, int(round(spec.rt60_s * spec.fs)))
    envelope = np.exp(-_DECAY_60DB * np.arange(length) / (spec.fs * spec.rt60_s))
    rir = rng.standard_normal(length) * envelope
    rir[0] = 1.0
    tail_peak = np.max(np.abs(rir[1:])) if length > 1 else 0.0
    if tail_peak > 1.0:
        rir[1:] /= tail_peak
    return rir


def convolve_rir(seg: np.ndarray, rir: np.ndarray) -> np.ndarray:
    """
    Linear convolution of ``seg`` with ``rir``, truncated to ``len(seg)``.

    Long responses go through the FFT, short ones are convolved directly.
    """
    if seg.size == 0 or rir.size == 0:
        raise ValueError("seg and rir must not be empty")
    if rir.shape[0] > DIRECT_CONVOLUTION_MAX:
        out = signal.fftconvolve(seg, rir, mode="full")
    else:
        out = np.convolve(seg, rir, mode="full")
    return out[: seg.shape[0]]


class ReverbEffect(BaseEffect):
    """Synthetic room reverberation for a random room size."""

    name = "reverb"
    order = 30
    probability = "p_reverb"

    @classmethod
    def draw(cls, rng, cfg):
        rooms = sorted(cfg.rt60_by_room)
        room = rooms[int(rng.integers(len(rooms)))]
        return {
            "room_size": room,
            "rt60_s": float(rng.uniform(*cfg.rt60_by_room[room])),
            "seed": int(rng.integers(SEED_BOUND)),
        }

    @classmethod
    def apply(cls, seg, params, fs):
        spec = RirSpec(params["room_size"], params["rt60_s"], fs)
        rir = synth_rir(spec, np.random.default_rng(params["seed"]))
        return convolve_rir(seg, rir)
