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
"""Multi-tap echo."""

from typing import Sequence, Tuple

import numpy as np

from dhvani.lib.audio_io import TARGET_RATE
from dhvani.lib.augment.effects import BaseEffect


def apply_echo(
    seg: np.ndarray, taps: Sequence[Tuple[float, float]], fs: int = TARGET_RATE
) -> np.ndarray:
    """
    Add delayed, attenuated copies of ``seg`` to itself.

    ``y[n] = x[n] + sum_k a_k * x[n - d_k]``. The output is not extended: echo
    falling past the segment end is dropped.

    Args:
        seg: Input samples.
        taps: ``(delay_ms, amplitude)`` pairs.
        fs: Sample rate.
    """
    out = np.array(seg, dtype=np.float64)
    size = out.shape[0]
    for delay_ms, amplitude in taps:
        delay = int(round(delay_ms * fs / 1000.0))
        if 0 < delay < size:
            out[delay:] += amplitude * seg[: size - delay]
    return out


class EchoEffect(BaseEffect):
    """Two to four echo taps, tap k attenuated by decay**k."""

    name = "echo"
    order = 20
    probability = "p_echo"

    @classmethod
    def draw(cls, rng, cfg):
        low, high = cfg.echo_taps
        count = int(rng.integers(low, high + 1))
        decay = float(rng.uniform(*cfg.echo_decay))
        return {
            "taps": [
                [float(rng.uniform(*cfg.echo_delay_ms)), decay ** (k + 1)]
                for k in range(count)
            ]
        }

    @classmethod
    def apply(cls, seg, params, fs):
        return apply_echo(seg, params["taps"], fs)
