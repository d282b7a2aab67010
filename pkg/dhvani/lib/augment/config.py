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
"""Settings of the augmentation pipeline."""

from dataclasses import dataclass, field, fields
from typing import Dict, Tuple

from dhvani.lib.audio_io import TARGET_RATE

#: Simulated room sizes and their default RT60 ranges in seconds.
ROOM_SIZES = {
    "small": (0.2, 0.4),
    "medium": (0.4, 0.8),
    "large": (0.8, 1.5),
}

Interval = Tuple[float, float]


def _interval(name: str, value) -> tuple:
    value = tuple(value)
    if len(value) != 2 or value[0] > value[1]:
        raise ValueError(f"{name} must be an interval [lower, upper], got {value}")
    return value


@dataclass(frozen=True)
class AugmentConfig:
    """
    Effect probabilities and parameter ranges.

    Every ``p_*`` field is the probability that the effect is applied to a
    window; every tuple field is a closed ``[lower, upper]`` interval parameters
    are drawn from uniformly.

    Attributes:
        coverage: Fraction of the clip covered by augmentation windows.
        window_s: Window length range in seconds.
        snr_db: Signal-to-noise ratio range of the additive noise.
        echo_taps: Range of the echo tap count.
        echo_delay_ms: Range of each echo tap delay.
        echo_decay: Range of the echo decay; tap k is scaled by decay**k.
        rt60_by_room: RT60 range for every simulated room size.
        clip_frac: Clipping threshold range, relative to the window peak.
        band_hz: Telephone band edges.
        pitch_semitones: Pitch shift range.
        stretch_rate: Time stretch rate range.
    """

    coverage: float = 0.30
    window_s: Interval = (3.0, 6.0)
    p_noise: float = 0.65
    p_echo: float = 0.55
    p_reverb: float = 0.60
    p_clip: float = 0.30
    p_bandpass: float = 0.20
    p_pitch: float = 0.25
    p_stretch: float = 0.25
    snr_db: Interval = (5.0, 20.0)
    echo_taps: Tuple[int, int] = (2, 4)
    echo_delay_ms: Interval = (150.0, 800.0)
    echo_decay: Interval = (0.4, 0.75)
    rt60_by_room: Dict[str, Interval] = field(default_factory=lambda: dict(ROOM_SIZES))
    clip_frac: Interval = (0.3, 0.7)
    band_hz: Interval = (300.0, 3400.0)
    pitch_semitones: Interval = (-3.0, 3.0)
    stretch_rate: Interval = (0.80, 1.20)

    def __post_init__(self):
        if not 0.0 < self.coverage < 1.0:
            raise ValueError("coverage must be in (0, 1)")
        for item in fields(self):
            value = getattr(self, item.name)
            if item.name.startswith("p_") and not 0.0 <= value <= 1.0:
                raise ValueError(f"{item.name} must be a probability, got {value}")
            if isinstance(value, (tuple, list)):
                object.__setattr__(self, item.name, _interval(item.name, value))
        rooms = {
            name: _interval(f"rt60_by_room.{name}", value)
            for name, value in self.rt60_by_room.items()
        }
        if not rooms or not set(rooms) <= set(ROOM_SIZES):
            raise ValueError(f"rt60_by_room keys must be among {sorted(ROOM_SIZES)}")
        for name, (lower, upper) in rooms.items():
            if lower < ROOM_SIZES[name][0] or upper > ROOM_SIZES[name][1]:
                raise ValueError(
                    f"rt60_by_room.{name} must lie within {ROOM_SIZES[name]}"
                )
        object.__setattr__(self, "rt60_by_room", rooms)
        if self.window_s[0] <= 0:
            raise ValueError("window_s must be positive")


@dataclass(frozen=True)
class RirSpec:
    """
    Parameters of a synthetic room impulse response.

    Attributes:
        room_size: One of the simulated room sizes.
        rt60_s: Time for the energy to decay by 60 dB, within the range of
            the room size.
        fs: Sample rate of the response.
    """

    room_size: str
    rt60_s: float
    fs: int = TARGET_RATE

    def __post_init__(self):
        if self.room_size not in ROOM_SIZES:
            raise ValueError(f"unknown room size {self.room_size!r}")
        if self.rt60_s <= 0 or self.fs <= 0:
            raise ValueError("rt60_s and fs must be positive")
        lower, upper = ROOM_SIZES[self.room_size]
        if not lower <= self.rt60_s <= upper:
            raise ValueError(
                f"rt60_s {self.rt60_s} outside the {self.room_size} room range "
                f"[{lower}, {upper}]"
            )
