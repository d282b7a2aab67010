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
"""Pitch shifting: time stretch followed by resampling back to length."""

from fractions import Fraction

import numpy as np
from scipy import signal

from dhvani.lib.audio_io import TARGET_RATE, fit_length
from dhvani.lib.augment.effects import BaseEffect
from dhvani.lib.augment.effects.stretch import time_stretch

# Largest up/down factor of the polyphase resampler.
_MAX_DENOMINATOR = 256


def pitch_shift(seg: np.ndarray, semitones: float, fs: int = TARGET_RATE) -> np.ndarray:
    """
    Shift the pitch of ``seg`` by ``semitones`` keeping its duration.

    The segment is stretched to ``r = 2 ** (semitones / 12)`` times its length,
    then resampled by ``1 / r`` and trimmed or padded to the input length.
    """
    if not -12.0 <= semitones <= 12.0:
        raise ValueError(f"semitones must be in [-12, 12], got {semitones}")
    ratio = 2.0 ** (semitones / 12.0)
    stretched = time_stretch(seg, 1.0 / ratio, fs)
    factor = Fraction(1.0 / ratio).limit_denominator(_MAX_DENOMINATOR)
    shifted = signal.resample_poly(stretched, factor.numerator, factor.denominator)
    return fit_length(shifted, seg.shape[0])


class PitchEffect(BaseEffect):
    name = "pitch"
    order = 60
    probability = "p_pitch"

    @classmethod
    def draw(cls, rng, cfg):
        return {"semitones": float(rng.uniform(*cfg.pitch_semitones))}

    @classmethod
    def apply(cls, seg, params, fs):
        return pitch_shift(seg, params["semitones"], fs)
