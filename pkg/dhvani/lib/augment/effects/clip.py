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
"""Hard clipping, as produced by an overdriven converter."""

import numpy as np

from dhvani.lib.audio_io import peak
from dhvani.lib.augment.effects import BaseEffect


def apply_clip(seg: np.ndarray, threshold: float) -> np.ndarray:
    """Clamp every sample to ``[-threshold, threshold]``."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    return np.clip(seg, -threshold, threshold)


class ClipEffect(BaseEffect):
    name = "clip"
    order = 40
    probability = "p_clip"

    @classmethod
    def draw(cls, rng, cfg):
        return {"clip_frac": float(rng.uniform(*cfg.clip_frac))}

    @classmethod
    def apply(cls, seg, params, fs):
        threshold = params["clip_frac"] * peak(seg)
        if threshold == 0.0:
            return seg.copy()
        return apply_clip(seg, threshold)
