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
"""Tests for the :mod:`dhvani.lib.diarization.rttm` module."""

import unittest

import numpy as np

from dhvani.lib.diarization import rttm
from dhvani.lib.diarization.segments import (
    DiarizationSegment as Seg,
    parse_annotation_csv,
    resolve_overlaps,
)
from dhvani.lib.exceptions import FormatError, RttmParseError
from dhvani.tests import testkit


class WriteRttmTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.diarization.rttm.write_rttm` function."""

    def test_golden(self):
        self.assertEqual(
            testkit.golden("file1.rttm"),
            rttm.write_rttm("file1", [Seg(1.0, 5.0, "SPK1")]),
        )

    def test_golden_from_annotation(self):
        items = resolve_overlaps(parse_annotation_csv(testkit.golden("file2.csv")))
        self.assertEqual(testkit.golden("file2.rttm"), rttm.write_rttm("file2", items))

    def test_empty(self):
        self.assertEqual("", rttm.write_rttm("file1", []))

    def test_sorted_by_onset(self):
        rendered = rttm.write_rttm("f", [Seg(5.0, 6.0, "B"), Seg(1.0, 2.0, "A")])
        onsets = [line.split()[3] for line in rendered.splitlines()]
        self.assertEqual(["1.000", "5.000"], onsets)

    def test_invalid_uri(self):
        for uri in ("", "my file"):
            with self.assertRaises(FormatError):
                rttm.write_rttm(uri, [Seg(1.0, 5.0, "SPK1")])

    def test_sub_millisecond_sliver_skipped(self):
        items = resolve_overlaps([Seg(0.0, 10.0, "A"), Seg(5.0, 10.0004, "B")])
        self.assertEqual(2, len(items))
        rendered = rttm.write_rttm("rec", items)
        self.assertEqual(1, len(rendered.splitlines()))
        self.assertEqual({"rec": [Seg(0.0, 10.0, "A")]}, rttm.parse_rttm(rendered))


class ParseRttmTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.diarization.rttm.parse_rttm` function."""

    def test_golden(self):
        self.assertEqual(
            {"file1": [Seg(1.0, 5.0, "SPK1")]},
            rttm.parse_rttm(testkit.golden("file1.rttm")),
        )

    def test_skipped_lines(self):
        content = (
            ";; a comment\n"
            "\n"
            "SPKR-INFO f 1 <NA> <NA> <NA> unknown A <NA> <NA>\n"
            "SPEAKER f 1 0.500 1.000 <NA> <NA> A <NA> <NA>\n"
        )
        self.assertEqual({"f": [Seg(0.5, 1.5, "A")]}, rttm.parse_rttm(content))

    def test_recordings_in_file_order(self):
        content = rttm.write_rttm("b", [Seg(0.0, 1.0, "X")]) + rttm.write_rttm(
            "a", [Seg(0.0, 1.0, "Y")]
        )
        self.assertEqual(["b", "a"], list(rttm.parse_rttm(content)))

    def test_bad_onset(self):
        with self.assertRaises(RttmParseError) as context:
            rttm.parse_rttm("SPEAKER f 1 abc 2 <NA> <NA> A <NA> <NA>\n")
        self.assertEqual("onset", context.exception.field)
        self.assertEqual(1, context.exception.line_number)

    def test_bad_duration(self):
        with self.assertRaises(RttmParseError) as context:
            rttm.parse_rttm("\nSPEAKER f 1 1.0 0 <NA> <NA> A <NA> <NA>\n")
        self.assertEqual("duration", context.exception.field)
        self.assertEqual(2, context.exception.line_number)

    def test_missing_fields(self):
        with self.assertRaises(RttmParseError):
            rttm.parse_rttm("SPEAKER f 1 1.0 2.0\n")

    def test_round_trip(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            items = resolve_overlaps(testkit.random_segments(rng, 5, ("A", "B"), 60.0))
            items = [s for s in items if s.duration_s >= 0.01]
            parsed = rttm.parse_rttm(rttm.write_rttm("rec", items)).get("rec", [])
            self.assertEqual(len(items), len(parsed))
            for before, after in zip(items, parsed):
                self.assertEqual(before.speaker, after.speaker)
                self.assertAlmostEqual(before.start_s, after.start_s, delta=1e-3)
                self.assertAlmostEqual(before.end_s, after.end_s, delta=1e-3)


class UemTests(unittest.TestCase):
    """Tests for the UEM helpers."""

    def test_golden(self):
        self.assertEqual(testkit.golden("file1.uem"), rttm.write_uem("file1", 120.0))

    def test_three_decimals(self):
        self.assertEqual("f 1 0.000 1.234\n", rttm.write_uem("f", 1.2345))

    def test_not_positive(self):
        with self.assertRaises(FormatError):
            rttm.write_uem("f", 0.0)

    def test_parse(self):
        content = rttm.write_uem("a", 10.0) + ";; note\n" + rttm.write_uem("b", 2.5)
        self.assertEqual({"a": (0.0, 10.0), "b": (0.0, 2.5)}, rttm.parse_uem(content))

    def test_parse_malformed(self):
        for content in ("a 1 0.0\n", "a 1 x 2.0\n", "a 1 3.0 2.0\n"):
            with self.assertRaises(FormatError, msg=content):
                rttm.parse_uem(content)


class LstTests(unittest.TestCase):
    def test_write(self):
        self.assertEqual("a\nb\n", rttm.write_lst(["a", "b"]))
        self.assertEqual("a\n", rttm.write_lst(["a"]))

    def test_write_invalid(self):
        with self.assertRaises(FormatError):
            rttm.write_lst(["a b"])
        with self.assertRaises(FormatError):
            rttm.write_lst([])

    def test_parse(self):
        self.assertEqual(["a", "b"], rttm.parse_lst("a\n\n b \n"))
