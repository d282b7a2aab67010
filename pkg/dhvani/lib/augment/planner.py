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
Scheduling and rendering of segment-level augmentation.

:func:`plan_augmentation` decides, from a seed alone, which windows of a clip
are augmented and with which effect parameters. :func:`apply_plan` renders the
plan; everything outside the windows is left untouched.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from dhvani.lib import plugins
from dhvani.lib.audio_io import AudioBuffer, peak, scale_to_peak
from dhvani.lib.augment.config import AugmentConfig

_log = logging.getLogger(__name__)

#: Windows whose original peak is below this are renormalized to
#: :data:`FALLBACK_PEAK`.
SILENT_PEAK = 1e-6
FALLBACK_PEAK = 0.5


@dataclass(frozen=True)
class WindowPlan:
    """
    One augmentation window.

    Attributes:
        start_s: Window start in the clip.
        end_s: Window end in the clip.
        effects: Effect name to drawn parameters, in processing order.
    """

    start_s: float
    end_s: float
    effects: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def bounds(self, fs: int) -> Tuple[int, int]:
        """Sample range ``[start, end)`` of the window at rate ``fs``."""
        return int(round(self.start_s * fs)), int(round(self.end_s * fs))

    def to_dict(self) -> dict:
        return {"start_s": self.start_s, "end_s": self.end_s, "effects": self.effects}


@dataclass(frozen=True)
class AugmentPlan:
    """
    The complete set of random draws for one clip.

    Attributes:
        seed: The seed the plan was drawn from.
        duration_s: Duration of the clip.
        windows: Non-overlapping windows, sorted by start.
    """

    seed: int
    duration_s: float
    windows: List[WindowPlan] = field(default_factory=list)

    @property
    def covered_s(self) -> float:
        """Total window length."""
        return sum(w.end_s - w.start_s for w in self.windows)

    def to_dict(self) -> dict:
        """JSON-serializable form of the plan, for audit dumps."""
        return {
            "seed": self.seed,
            "duration_s": self.duration_s,
            "windows": [w.to_dict() for w in self.windows],
        }


def _free_gaps(
    windows: List[Tuple[float, float]], duration_s: float
) -> List[Tuple[float, float]]:
    gaps = []
    cursor = 0.0
    for start, end in sorted(windows):
        if start > cursor:
            gaps.append((cursor, start))
        cursor = max(cursor, end)
    if duration_s > cursor:
        gaps.append((cursor, duration_s))
    return gaps


def _draw_effects(
    rng: np.random.Generator, cfg: AugmentConfig, effects: Sequence[Any]
) -> Dict[str, Dict[str, Any]]:
    draws = {}
    for effect in effects:
        if effect.selected(rng, cfg):
            draws[effect.name] = effect.draw(rng, cfg)
    return draws


def _draw_windows(
    duration_s: float, cfg: AugmentConfig, rng: np.random.Generator
) -> List[WindowPlan]:
    effects = plugins.EFFECT_PLUGINS.get_plugins()
    if not any(getattr(cfg, effect.probability) > 0.0 for effect in effects):
        return []
    shortest, longest = cfg.window_s
    target = cfg.coverage * duration_s
    windows: List[WindowPlan] = []
    covered = 0.0
    while covered < target:
        spans = [(w.start_s, w.end_s) for w in windows]
        gaps = [g for g in _free_gaps(spans, duration_s) if g[1] - g[0] >= shortest]
        if not gaps:
            break
        widest = max(end - start for start, end in gaps)
        length = float(rng.uniform(shortest, min(longest, widest)))

        # Uniform start over every position where the window fits.
        slacks = [(start, end - start - length) for start, end in gaps]
        slacks = [(start, slack) for start, slack in slacks if slack >= 0.0]
        offset = float(rng.uniform(0.0, sum(slack for _, slack in slacks)))
        for start, slack in slacks:
            if offset <= slack:
                break
            offset -= slack
        begin = start + min(offset, slack)

        # Only windows that change the audio count toward the coverage.
        draws = _draw_effects(rng, cfg, effects)
        if not draws:
            continue
        windows.append(WindowPlan(begin, begin + length, draws))
        covered += length
    return sorted(windows, key=lambda w: w.start_s)


def plan_augmentation(duration_s: float, cfg: AugmentConfig, seed: int) -> AugmentPlan:
    """
    Draw the augmentation plan of a clip.

    Windows with uniform lengths in ``cfg.window_s`` are placed uniformly in
    the free space of the clip until they cover ``cfg.coverage`` of it or no
    gap can hold a window. Every effect is selected per window with its
    probability and its parameters drawn; a window that draws no effect is
    discarded and does not count toward the coverage.

    Args:
        duration_s: Clip duration.
        cfg: Augmentation settings.
        seed: 64-bit seed; the plan depends on nothing else.

    Returns:
        The plan, empty for clips shorter than the shortest window and when
        every effect probability is zero.
    """
    if duration_s <= 0:
        raise ValueError("duration_s must be positive")
    rng = np.random.default_rng(seed)
    windows = _draw_windows(duration_s, cfg, rng)
    plan = AugmentPlan(seed=seed, duration_s=duration_s, windows=windows)
    _log.debug(
        "Planned %s windows covering %.2f of %.2f s",
        len(windows),
        plan.covered_s,
        duration_s,
    )
    return plan


def apply_plan(buffer: AudioBuffer, plan: AugmentPlan) -> AudioBuffer:
    """
    Render an augmentation plan on a buffer.

    Every window runs its selected effects in processing order, is scaled back
    to its original peak and is written back in place. Samples outside the
    windows are copied unchanged.
    """
    fs = buffer.sample_rate
    effects = {effect.name: effect for effect in plugins.EFFECT_PLUGINS.get_plugins()}
    out = np.array(buffer.samples)
    for window in plan.windows:
        if not window.effects:
            continue
        begin, end = window.bounds(fs)
        end = min(end, out.shape[0])
        seg = buffer.samples[begin:end]
        if seg.size == 0:
            continue
        processed = seg
        for name in sorted(window.effects, key=lambda n: effects[n].order):
            processed = effects[name].apply(processed, window.effects[name], fs)
        original = peak(seg)
        target = original if original >= SILENT_PEAK else FALLBACK_PEAK
        out[begin:end] = scale_to_peak(processed, target)
    return AudioBuffer(out, fs)


def augment_clip(buffer: AudioBuffer, cfg: AugmentConfig, seed: int) -> AudioBuffer:
    """Plan and render the augmentation of a whole clip."""
    return apply_plan(buffer, plan_augmentation(buffer.duration_seconds, cfg, seed))
