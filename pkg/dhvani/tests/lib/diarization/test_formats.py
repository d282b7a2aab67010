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
"""Tests for the diarization file format plugins."""

import json
import unittest
from collections import OrderedDict

from omegaconf import OmegaConf

from dhvani.lib.diarization.formats import Corpus
from dhvani.lib.diarization.formats.annotation_csv import CsvFormat
from dhvani.lib.diarization.formats.manifest import ManifestFormat
from dhvani.lib.diarization.formats.rttm import LstFormat, RttmFormat, UemFormat
from dhvani.lib.diarization.formats.segments_json import JsonFormat
from dhvani.lib.diarization.manifest import ManifestPaths
from dhvani.lib.diarization.segments import DiarizationSegment as Seg
from dhvani.lib.exceptions import DhvaniPluginException, FormatError
from dhvani.tests import testkit


def corpus(**kwargs):
    segments = OrderedDict(
        [
            ("rec2", [Seg(0.0, 2.0, "A"), Seg(3.0, 4.5, "B")]),
            ("rec1", [Seg(1.0, 5.0, "SPK1")]),
        ]
    )
    return Corpus(segments=segments, **kwargs)


class CorpusTests(unittest.TestCase):
    def test_uris(self):
        self.assertEqual(["rec2", "rec1"], corpus().uris)

    def test_duration(self):
        self.assertEqual(60.0, corpus(durations={"rec2": 60.0}).duration("rec2"))
        self.assertEqual(5.0, corpus().duration("rec1"))

    def test_unknown_duration(self):
        with self.assertRaises(FormatError):
            corpus().duration("rec3")


class CsvFormatTests(unittest.TestCase):
    def test_parse(self):
        recordings = CsvFormat.parse(testkit.golden("file2.csv"), "file2")
        self.assertEqual(["file2"], list(recordings))
        self.assertEqual(3, len(recordings["file2"]))

    def test_render(self):
        with self.assertRaises(DhvaniPluginException):
            CsvFormat.render(corpus())


class RttmFormatTests(unittest.TestCase):
    def test_render_in_corpus_order(self):
        rendered = RttmFormat.render(corpus())
        uris = [line.split()[1] for line in rendered.splitlines()]
        self.assertEqual(["rec2", "rec2", "rec1"], uris)

    def test_parse(self):
        recordings = RttmFormat.parse(testkit.golden("file1.rttm"), "ignored")
        self.assertEqual({"file1": [Seg(1.0, 5.0, "SPK1")]}, recordings)


class UemFormatTests(unittest.TestCase):
    def test_render(self):
        rendered = UemFormat.render(corpus(durations={"rec2": 60.0}))
        self.assertEqual("rec2 1 0.000 60.000\nrec1 1 0.000 5.000\n", rendered)

    def test_parse(self):
        with self.assertRaises(DhvaniPluginException):
            UemFormat.parse("rec1 1 0.000 5.000\n", "rec1")


class LstFormatTests(unittest.TestCase):
    def test_render(self):
        self.assertEqual("rec2\nrec1\n", LstFormat.render(corpus()))


class JsonFormatTests(unittest.TestCase):
    def test_single_recording_is_an_array(self):
        single = Corpus(segments={"rec1": [Seg(1.0, 5.0, "S1")]})
        self.assertEqual(
            '[{"start":1.0,"end":5.0,"speaker":"S1"}]', JsonFormat.render(single)
        )

    def test_several_recordings_are_an_object(self):
        document = json.loads(JsonFormat.render(corpus()))
        self.assertEqual(["rec2", "rec1"], list(document))
        self.assertEqual(2, len(document["rec2"]))

    def test_round_trip(self):
        rendered = JsonFormat.render(corpus())
        self.assertEqual(dict(corpus().segments), JsonFormat.parse(rendered, "x"))
        single = JsonFormat.render(Corpus(segments={"rec1": [Seg(1.0, 5.0, "S1")]}))
        expected = {"rec": [Seg(1.0, 5.0, "S1")]}
        self.assertEqual(expected, JsonFormat.parse(single, "rec"))

    def test_parse_invalid(self):
        with self.assertRaises(FormatError):
            JsonFormat.parse("not json", "rec")


class ManifestFormatTests(unittest.TestCase):
    def test_render(self):
        paths = ManifestPaths("/audio", "/protocol")
        splits = {"train": ["rec2"], "development": ["rec1"], "test": []}
        document = OmegaConf.create(
            ManifestFormat.render(corpus(splits=splits, paths=paths))
        )
        protocol = document.Protocols.Dhvani.SpeakerDiarization.Bangla
        self.assertEqual(["rec1"], list(protocol.development.files))

    def test_render_without_paths(self):
        with self.assertRaises(FormatError):
            ManifestFormat.render(corpus())
