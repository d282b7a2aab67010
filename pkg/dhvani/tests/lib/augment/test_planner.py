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
"""Tests for the :mod:`dhvani.lib.augment.planner` module."""

import json
import unittest

import numpy as np

from dhvani.lib.audio_io import AudioBuffer, peak
from dhvani.lib.augment import (
    AugmentConfig,
    apply_plan,
    augment_clip,
    plan_augmentation,
)
from dhvani.lib.augment.planner import FALLBACK_PEAK, AugmentPlan, WindowPlan
from dhvani.tests import testkit

FS = 8000

QUIET = dict(
    p_noise=0.0,
    p_echo=0.0,
    p_reverb=0.0,
    p_clip=0.0,
    p_bandpass=0.0,
    p_pitch=0.0,
    p_stretch=0.0,
)


def outside_windows(plan, size):
    mask = np.ones(size, dtype=bool)
    for window in plan.windows:
        begin, end = window.bounds(FS)
        mask[begin:end] = False
    return mask


class AugmentConfigTests(unittest.TestCase):
    def test_defaults(self):
        cfg = AugmentConfig()
        self.assertEqual(0.30, cfg.coverage)
        self.assertEqual((3.0, 6.0), cfg.window_s)
        self.assertEqual(["large", "medium", "small"], sorted(cfg.rt60_by_room))

    def test_lists_become_intervals(self):
        self.assertEqual((5.0, 10.0), AugmentConfig(snr_db=[5.0, 10.0]).snr_db)

    def test_invalid(self):
        for kwargs in (
            {"coverage": 0.0},
            {"coverage": 1.0},
            {"p_echo": 1.5},
            {"snr_db": (20.0, 5.0)},
            {"window_s": (0.0, 2.0)},
            {"rt60_by_room": {"hall": (1.0, 2.0)}},
            {"rt60_by_room": {}},
            {"rt60_by_room": {"small": (0.2, 0.9)}},
        ):
            with self.assertRaises(ValueError, msg=str(kwargs)):
                AugmentConfig(**kwargs)


class PlanAugmentationTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.augment.planner.plan_augmentation` function."""

    def test_coverage(self):
        cfg = AugmentConfig()
        for seed in range(50):
            plan = plan_augmentation(60.0, cfg, seed)
            self.assertTrue(18.0 <= plan.covered_s <= 24.0, plan.covered_s)

    def test_only_windows_with_effects_count(self):
        cfg = AugmentConfig()
        for seed in range(100):
            plan = plan_augmentation(60.0, cfg, seed)
            self.assertTrue(all(window.effects for window in plan.windows), seed)
            fraction = plan.covered_s / 60.0
            self.assertTrue(0.25 <= fraction <= 0.40, (seed, fraction))

    def test_quiet_config_plans_nothing(self):
        plan = plan_augmentation(60.0, AugmentConfig(**QUIET), 0)
        self.assertEqual([], plan.windows)

    def test_windows(self):
        plan = plan_augmentation(120.0, AugmentConfig(), 3)
        previous_end = 0.0
        for window in plan.windows:
            self.assertGreaterEqual(window.start_s, previous_end)
            self.assertLessEqual(window.end_s, 120.0)
            self.assertTrue(3.0 <= window.end_s - window.start_s <= 6.0)
            previous_end = window.end_s

    def test_short_clip(self):
        plan = plan_augmentation(2.0, AugmentConfig(), 0)
        self.assertEqual([], plan.windows)
        self.assertEqual(0.0, plan.covered_s)

    def test_not_positive(self):
        with self.assertRaises(ValueError):
            plan_augmentation(0.0, AugmentConfig(), 0)

    def test_deterministic(self):
        cfg = AugmentConfig()
        first = plan_augmentation(60.0, cfg, 2**40 + 1)
        again = plan_augmentation(60.0, cfg, 2**40 + 1)
        self.assertEqual(first.to_dict(), again.to_dict())
        self.assertNotEqual(first.to_dict(), plan_augmentation(60.0, cfg, 2).to_dict())

    def test_effects_in_processing_order(self):
        order = ["noise", "echo", "reverb", "clip", "bandpass", "pitch", "stretch"]
        cfg = AugmentConfig(**{name: 1.0 for name in QUIET})
        plan = plan_augmentation(30.0, cfg, 1)
        self.assertTrue(plan.windows)
        for window in plan.windows:
            self.assertEqual(order, list(window.effects))

    def test_json_dump(self):
        plan = plan_augmentation(60.0, AugmentConfig(), 5)
        dumped = json.loads(json.dumps(plan.to_dict()))
        self.assertEqual(5, dumped["seed"])
        self.assertEqual(len(plan.windows), len(dumped["windows"]))


class ApplyPlanTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.augment.planner.apply_plan` function."""

    def setUp(self):
        self.buffer = AudioBuffer(testkit.tone(220.0, 30.0, FS, amplitude=0.4), FS)

    def test_quiet_config_is_identity(self):
        out = augment_clip(self.buffer, AugmentConfig(**QUIET), 7)
        np.testing.assert_array_equal(self.buffer.samples, out.samples)

    def test_locality_and_peaks(self):
        cfg = AugmentConfig()
        for seed in range(3):
            plan = plan_augmentation(self.buffer.duration_seconds, cfg, seed)
            out = apply_plan(self.buffer, plan)
            self.assertEqual(len(self.buffer), len(out))
            self.assertEqual(FS, out.sample_rate)
            mask = outside_windows(plan, len(out))
            np.testing.assert_array_equal(self.buffer.samples[mask], out.samples[mask])
            for window in plan.windows:
                begin, end = window.bounds(FS)
                if window.effects:
                    expected = peak(self.buffer.samples[begin:end])
                    self.assertAlmostEqual(expected, peak(out.samples[begin:end]))

    def test_deterministic(self):
        cfg = AugmentConfig()
        first = augment_clip(self.buffer, cfg, 11)
        np.testing.assert_array_equal(
            first.samples, augment_clip(self.buffer, cfg, 11).samples
        )

    def test_modified_sample_fraction(self):
        rng = np.random.default_rng(4)
        buffer = AudioBuffer(rng.normal(0.0, 0.1, 60 * FS), FS)
        for seed in range(5):
            out = augment_clip(buffer, AugmentConfig(), seed)
            changed = np.count_nonzero(out.samples != buffer.samples) / len(buffer)
            self.assertTrue(0.25 <= changed <= 0.40, (seed, changed))

    def test_random_clips_are_reproducible(self):
        rng = np.random.default_rng(8)
        cfg = AugmentConfig()
        quiet = AugmentConfig(**QUIET)
        for _ in range(100):
            size = int(rng.uniform(4.0, 10.0) * FS)
            buffer = AudioBuffer(rng.normal(0.0, 0.1, size), FS)
            seed = int(rng.integers(2**63))
            first = augment_clip(buffer, cfg, seed)
            again = augment_clip(buffer, cfg, seed)
            np.testing.assert_array_equal(first.samples, again.samples)
            quiet_out = augment_clip(buffer, quiet, seed)
            np.testing.assert_array_equal(buffer.samples, quiet_out.samples)

    def test_silent_window(self):
        buffer = AudioBuffer(np.zeros(10 * FS), FS)
        params = {"pink_weight": 0.5, "snr_db": 10.0, "seed": 3}
        window = WindowPlan(2.0, 5.0, {"noise": params})
        plan = AugmentPlan(seed=0, duration_s=10.0, windows=[window])
        out = apply_plan(buffer, plan)
        self.assertAlmostEqual(FALLBACK_PEAK, peak(out.samples[2 * FS : 5 * FS]))
        self.assertEqual(0.0, peak(out.samples[: 2 * FS]))

    def test_window_without_effects(self):
        plan = AugmentPlan(seed=0, duration_s=30.0, windows=[WindowPlan(1.0, 4.0)])
        out = apply_plan(self.buffer, plan)
        np.testing.assert_array_equal(self.buffer.samples, out.samples)
