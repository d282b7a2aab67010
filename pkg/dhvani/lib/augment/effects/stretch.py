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
"""Phase-vocoder time stretching."""

import librosa
import numpy as np

from dhvani.lib.audio_io import TARGET_RATE, fit_length
from dhvani.lib.augment.effects import BaseEffect

N_FFT = 1024
HOP_LENGTH = 256


def time_stretch(seg: np.ndarray, rate: float, fs: int = TARGET_RATE) -> np.ndarray:
    """
    Change the duration of ``seg`` by ``1 / rate`` while keeping its pitch.

    The STFT (1024-sample Hann window, hop 256) is resampled in time with
    phase accumulation and inverted to exactly ``round(len(seg) / rate)``
    samples.

    Args:
        seg: Input samples.
        rate: Speed factor in [0.5, 2.0]; above 1 shortens the signal.
        fs: Sample rate (the stretch itself is rate independent).
    """
    if not 0.5 <= rate <= 2.0:
        raise ValueError(f"rate must be in [0.5, 2.0], got {rate}")
    length = int(round(seg.shape[0] / rate))
    stft = librosa.stft(seg, n_fft=N_FFT, hop_length=HOP_LENGTH, window="hann")
    stretched = librosa.phase_vocoder(stft, rate=rate, hop_length=HOP_LENGTH)
    out = librosa.istft(stretched, hop_length=HOP_LENGTH, window="hann", length=length)
    return out.astype(np.float64)


class StretchEffect(BaseEffect):
    """
    Time stretch inside a fixed-length window.

    The stretched audio is trimmed or zero-padded back to the window length so
    the following audio does not move.
    """

    name = "stretch"
    order = 70
    probability = "p_stretch"

    @classmethod
    def draw(cls, rng, cfg):
        return {"rate": float(rng.uniform(*cfg.stretch_rate))}

    @classmethod
    def apply(cls, seg, params, fs):
        return fit_length(time_stretch(seg, params["rate"], fs), seg.shape[0])
