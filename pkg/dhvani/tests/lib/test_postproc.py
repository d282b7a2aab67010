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
"""Tests for the :mod:`dhvani.lib.postproc` module."""

import unittest

import mock
import numpy as np

from dhvani.lib import postproc
from dhvani.lib.postproc import DedupConfig

CFG = DedupConfig()
VOCAB = ("আমি", "যাই", "ভালো", "ক", ">>", "হাহাহা")


def random_sentence(rng, max_words=15):
    size = int(rng.integers(0, max_words + 1))
    return " ".join(VOCAB[i] for i in rng.integers(len(VOCAB), size=size))


class DedupConfigTests(unittest.TestCase):
    def test_defaults(self):
        self.assertEqual(10, CFG.max_phrase_words)
        self.assertEqual(2, CFG.phrase_min_repeats)
        self.assertEqual(3, CFG.word_min_repeats)
        self.assertEqual((2, 10), CFG.ngram_chars)
        self.assertEqual(3, CFG.ngram_min_repeats)
        self.assertEqual(10, CFG.max_iterations)

    def test_word_repeats_keep_two(self):
        with self.assertRaises(ValueError):
            DedupConfig(word_min_repeats=2)

    def test_positive(self):
        with self.assertRaises(ValueError):
            DedupConfig(max_iterations=0)
        with self.assertRaises(ValueError):
            DedupConfig(ngram_chars=(0, 4))

    def test_interval(self):
        with self.assertRaises(ValueError):
            DedupConfig(ngram_chars=(5, 2))


class PrimitiveRootTests(unittest.TestCase):
    def test_root(self):
        self.assertEqual("হা", postproc.primitive_root("হাহা"))
        self.assertEqual("abc", postproc.primitive_root("abcabc"))
        self.assertEqual("a", postproc.primitive_root("aaaa"))
        self.assertEqual("ab", postproc.primitive_root("ab"))


class DedupTextTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.postproc.dedup_text` function."""

    def test_phrase(self):
        self.assertEqual("আমি যাই", postproc.dedup_text("আমি যাই আমি যাই আমি যাই", CFG))

    def test_word_keeps_two_copies(self):
        self.assertEqual("ভালো ভালো", postproc.dedup_text("ভালো ভালো ভালো ভালো", CFG))

    def test_ngram(self):
        self.assertEqual("হা", postproc.dedup_text("হাহাহাহাহাহা", CFG))

    def test_reduplication_survives(self):
        text = "সে ধীরে ধীরে হাঁটে"
        self.assertEqual(text, postproc.dedup_text(text, CFG))

    def test_unchanged(self):
        text = "আমি বাংলায় গান গাই"
        self.assertEqual(text, postproc.dedup_text(text, CFG))
        self.assertEqual("", postproc.dedup_text("", CFG))

    def test_partial_words_are_not_phrases(self):
        """Assert repeats only match on word boundaries."""
        self.assertEqual("কআমি আমি", postproc.dedup_text("কআমি আমি", CFG))

    @mock.patch("dhvani.lib.postproc._log", autospec=True)
    def test_iteration_bound(self, mock_log):
        cfg = DedupConfig(max_iterations=1)
        self.assertEqual("কা কা কা", postproc.dedup_text("কাকাকা কা কা", cfg))
        self.assertEqual(1, mock_log.debug.call_count)
        self.assertEqual("কা কা", postproc.dedup_text("কাকাকা কা কা", CFG))

    def test_idempotent_and_shrinking(self):
        rng = np.random.default_rng(0)
        for _ in range(500):
            text = random_sentence(rng)
            once = postproc.dedup_text(text, CFG)
            self.assertLessEqual(len(once), len(text))
            self.assertEqual(once, postproc.dedup_text(once, CFG), text)


class StripMarkersTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.postproc.strip_markers` function."""

    def test_examples(self):
        self.assertEqual("হ্যালো", postproc.strip_markers(">> হ্যালো"))
        self.assertEqual("ক খ", postproc.strip_markers("ক >> খ"))
        self.assertEqual("ক খ", postproc.strip_markers("ক>>খ"))

    def test_unchanged(self):
        text = "ক  খ"
        self.assertIs(text, postproc.strip_markers(text))


class PostprocessTranscriptTests(unittest.TestCase):
    """Tests for the :func:`dhvani.lib.postproc.postprocess_transcript` function."""

    def test_empty(self):
        self.assertEqual("", postproc.postprocess_transcript("", CFG))

    def test_clean_text(self):
        text = "আমি বাংলায় গান গাই"
        self.assertEqual(text, postproc.postprocess_transcript(text, CFG))

    def test_zero_width_repeats(self):
        text = "আ\u200bমি যাই আমি যাই  আমি\u200c যাই"
        self.assertEqual("আমি যাই", postproc.postprocess_transcript(text, CFG))

    def test_markers(self):
        text = ">> আমি যাই >> ভালো ভালো ভালো"
        expected = "আমি যাই ভালো ভালো"
        self.assertEqual(expected, postproc.postprocess_transcript(text, CFG))

    def test_idempotent(self):
        rng = np.random.default_rng(1)
        for _ in range(500):
            once = postproc.postprocess_transcript(random_sentence(rng), CFG)
            self.assertEqual(once, postproc.postprocess_transcript(once, CFG))
            self.assertNotIn(">>", once)
