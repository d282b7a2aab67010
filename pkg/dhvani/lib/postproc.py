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
Clean-up of raw ASR output.

Decoders sometimes loop and emit the same phrase, word or syllable over and
over. :func:`dedup_text` collapses those runs with backreference patterns,
:func:`strip_markers` drops speaker-change markers and
:func:`postprocess_transcript` chains everything with Unicode hygiene.
"""

import functools
import logging
import re
from dataclasses import dataclass
from typing import List, Tuple

from dhvani.lib.textnorm import NormConfig, clean_unicode, collapse_whitespace

_log = logging.getLogger(__name__)

#: Speaker-change marker emitted by some decoders.
MARKER = ">>"

_marker_re = re.compile(r"\s*" + re.escape(MARKER) + r"\s*")


@dataclass(frozen=True)
class DedupConfig:
    """
    Repetition collapse settings.

    Attributes:
        max_phrase_words: Longest phrase, in words, checked for repeats.
        phrase_min_repeats: Consecutive copies of a phrase collapsed to one.
        word_min_repeats: Consecutive copies of a word collapsed to two.
        ngram_chars: Range of in-word character n-gram lengths checked.
        ngram_min_repeats: Consecutive copies of an n-gram collapsed to one.
        max_iterations: Bound on the number of passes.
    """

    max_phrase_words: int = 10
    phrase_min_repeats: int = 2
    word_min_repeats: int = 3
    ngram_chars: Tuple[int, int] = (2, 10)
    ngram_min_repeats: int = 3
    max_iterations: int = 10

    def __post_init__(self):
        object.__setattr__(self, "ngram_chars", tuple(self.ngram_chars))
        values = (
            self.max_phrase_words,
            self.phrase_min_repeats,
            self.word_min_repeats,
            self.ngram_min_repeats,
            self.max_iterations,
        ) + self.ngram_chars
        if min(values) < 1:
            raise ValueError("all deduplication settings must be >= 1")
        if len(self.ngram_chars) != 2 or self.ngram_chars[0] > self.ngram_chars[1]:
            raise ValueError("ngram_chars must be an interval [lower, upper]")
        if self.word_min_repeats < 3:
            raise ValueError("word_min_repeats must be >= 3, two copies are kept")


@functools.lru_cache(maxsize=None)
def _phrase_re(words: int, repeats: int) -> "re.Pattern[str]":
    return re.compile(
        r"(?<!\S)((?:\S+\s+){%d}\S+)(?:\s+\1){%d,}(?!\S)" % (words - 1, repeats - 1)
    )


@functools.lru_cache(maxsize=None)
def _word_re(repeats: int) -> "re.Pattern[str]":
    return re.compile(r"(?<!\S)(\S+)(?:\s+\1){%d,}(?!\S)" % (repeats - 1))


@functools.lru_cache(maxsize=None)
def _ngram_re(chars: int, repeats: int) -> "re.Pattern[str]":
    return re.compile(r"(\S{%d})\1{%d,}" % (chars, repeats - 1))


def primitive_root(unit: str) -> str:
    """
    Shortest string whose repetition gives ``unit``.

    Example:
        >>> primitive_root("হাহা")
        'হা'
    """
    size = len(unit)
    for period in range(1, size):
        if size % period == 0 and unit[:period] * (size // period) == unit:
            return unit[:period]
    return unit


def _rules(cfg: DedupConfig) -> List[Tuple["re.Pattern[str]", object]]:
    rules: List[Tuple["re.Pattern[str]", object]] = []
    for words in range(cfg.max_phrase_words, 1, -1):
        rules.append((_phrase_re(words, cfg.phrase_min_repeats), r"\1"))
    rules.append((_word_re(cfg.word_min_repeats), r"\1 \1"))
    low, high = cfg.ngram_chars
    for chars in range(high, low - 1, -1):
        rules.append(
            (
                _ngram_re(chars, cfg.ngram_min_repeats),
                lambda match: primitive_root(match.group(1)),
            )
        )
    return rules


def _dedup_pass(text: str, cfg: DedupConfig) -> str:
    for pattern, replacement in _rules(cfg):
        text = pattern.sub(replacement, text)  # type: ignore
    return text


def dedup_text(text: str, cfg: DedupConfig) -> str:
    """
    Collapse repeated phrases, words and in-word character n-grams.

    Passes run until the text stops changing, at most ``cfg.max_iterations``
    times. Inside one pass, phrases are handled longest first, then single
    words (a run keeps two copies, which preserves Bangla reduplication such
    as "ধীরে ধীরে"), then character n-grams, longest first.

    Args:
        text: Raw hypothesis text.
        cfg: Collapse settings.

    Returns:
        The collapsed text, never longer than the input.
    """
    for _ in range(cfg.max_iterations):
        collapsed = _dedup_pass(text, cfg)
        if collapsed == text:
            return text
        text = collapsed
    _log.debug("Deduplication stopped after %s passes", cfg.max_iterations)
    return text


def strip_markers(text: str) -> str:
    """Remove every ``>>`` marker and re-collapse the surrounding whitespace."""
    if MARKER not in text:
        return text
    return collapse_whitespace(_marker_re.sub(" ", text))


def postprocess_transcript(
    text: str, cfg: DedupConfig, norm: NormConfig = NormConfig()
) -> str:
    """
    Clean one hypothesis: Unicode cleanup, deduplication, marker removal and
    whitespace collapse, repeated until the text is stable.
    """
    for _ in range(cfg.max_iterations):
        cleaned = collapse_whitespace(
            strip_markers(dedup_text(clean_unicode(text, norm), cfg))
        )
        if cleaned == text:
            break
        text = cleaned
    return text
