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
"""Telephone band-pass filter."""

import numpy as np
from scipy import signal

from dhvani.lib.augment.effects import BaseEffect

#: Length of the linear-phase FIR filter.
BANDPASS_TAPS = 513


def apply_bandpass(
    seg: np.ndarray, low_hz: float, high_hz: float, fs: int
) -> np.ndarray:
    """
    Band-pass ``seg`` with a Hann-windowed sinc FIR filter.

    The output is shifted by the filter group delay so it stays aligned with
    the input, and has the same length.

    Raises:
        ValueError: Unless ``0 < low_hz < high_hz < fs / 2``.
    """
    if not 0 < low_hz < high_hz < fs / 2.0:
        raise ValueError(f"band [{low_hz}, {high_hz}] Hz invalid at {fs} Hz")
    taps = signal.firwin(
        BANDPASS_TAPS, [low_hz, high_hz], pass_zero=False, window="hann", fs=fs
    )
    delay = (BANDPASS_TAPS - 1) // 2
    out = signal.fftconvolve(seg, taps, mode="full")
    return out[delay : delay + seg.shape[0]]


class BandpassEffect(BaseEffect):
    name = "bandpass"
    order = 50
    probability = "p_bandpass"

    @classmethod
    def draw(cls, rng, cfg):
        low, high = cfg.band_hz
        return {"low_hz": low, "high_hz": high}

    @classmethod
    def apply(cls, seg, params, fs):
        return apply_bandpass(seg, params["low_hz"], params["high_hz"], fs)
