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
"""Tests for the oracles and fixtures of :mod:`dhvani.tests.testkit`."""

import unittest

import numpy as np

from dhvani.lib.diarization.segments import DiarizationSegment as Seg
from dhvani.lib.exceptions import OracleError
from dhvani.tests import testkit


class BruteForceEditTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual((0, 0, 0), testkit.brute_force_edit(["a", "b"], ["a", "b"]))
        self.assertEqual(
            (1, 0, 1), testkit.brute_force_edit(["a", "b", "c"], ["a", "x", "c", "d"])
        )
        self.assertEqual((0, 1, 0), testkit.brute_force_edit(["a"], []))
        self.assertEqual((0, 0, 2), testkit.brute_force_edit([], ["a", "b"]))

    def test_prefers_substitutions(self):
        self.assertEqual((1, 0, 0), testkit.brute_force_edit(["a"], ["b"]))

    def test_size_bound(self):
        with self.assertRaises(OracleError):
            testkit.brute_force_edit(["a"] * 11, ["a"])


class SyntheticCorpusTests(unittest.TestCase):
    def test_no_noise(self):
        case = testkit.gen_synthetic_alignment_case(25, 10, 0.0, 1)
        self.assertEqual([(0, 10), (10, 20), (20, 25)], case.true_spans)
        for hyp, (start, end) in zip(case.chunk_hyps, case.true_spans):
            self.assertEqual(" ".join(case.gt_words[start:end]), hyp)

    def test_noise_rate(self):
        case = testkit.gen_synthetic_alignment_case(300, 10, 0.1, 5)
        self.assertAlmostEqual(0.10, case.substituted / 300, delta=0.04)

    def test_deterministic(self):
        self.assertEqual(
            testkit.gen_synthetic_alignment_case(50, 5, 0.2, 9),
            testkit.gen_synthetic_alignment_case(50, 5, 0.2, 9),
        )

    def test_invalid(self):
        with self.assertRaises(ValueError):
            testkit.gen_synthetic_alignment_case(5, 10, 0.1, 0)
        with self.assertRaises(ValueError):
            testkit.gen_synthetic_alignment_case(10, 5, 1.0, 0)


class FrameDerTests(unittest.TestCase):
    def test_perfect(self):
        ref = [Seg(0.0, 2.0, "A"), Seg(2.0, 3.0, "B")]
        hyp = [Seg(0.0, 2.0, "x"), Seg(2.0, 3.0, "y")]
        self.assertEqual(0.0, testkit.frame_der(ref, hyp))

    def test_shifted(self):
        ref = [Seg(0.0, 10.0, "A"), Seg(20.0, 110.0, "B")]
        hyp = [Seg(1.0, 11.0, "A"), Seg(20.0, 110.0, "B")]
        self.assertAlmostEqual(0.02, testkit.frame_der(ref, hyp), delta=0.0002)

    def test_empty_hypothesis(self):
        self.assertEqual(1.0, testkit.frame_der([Seg(0.0, 1.0, "A")], []))

    def test_brute_force_mapping(self):
        overlap = np.array([[1.0, 5.0], [4.0, 1.0], [0.0, 0.0]])
        self.assertEqual({1: 0, 0: 1}, testkit.brute_force_mapping(overlap))


class AudioHelpersTests(unittest.TestCase):
    def test_dominant_frequency(self):
        self.assertAlmostEqual(
            440.0, testkit.dominant_frequency(testkit.tone(440, 1.0), 16000), delta=1.0
        )

    def test_energy_decay(self):
        curve = testkit.energy_decay_db(np.array([1.0, 0.0, 0.0]))
        self.assertEqual(0.0, curve[0])
        self.assertEqual(-np.inf, curve[1])

    def test_golden(self):
        self.assertEqual("file1 1 0.000 120.000\n", testkit.golden("file1.uem"))
