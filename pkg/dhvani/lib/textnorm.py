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
Bangla transcript normalization.

The steps run in this order: Unicode cleanup, ASCII numerals to Bangla words,
removal of characters outside the Bengali block, whitespace collapse.
"""

import logging
import re
import unicodedata
from dataclasses import dataclass
from typing import Tuple

_log = logging.getLogger(__name__)

#: Longest ASCII digit run converted to words.
MAX_DIGITS = 12

ZERO_WIDTH = ("​", "﻿")
JOINERS = ("‌", "‍")

_digits_re = re.compile(r"[0-9]+")
_whitespace_re = re.compile(r"\s+")

# Bangla has a distinct word for every number below one hundred.
_BELOW_HUNDRED = (
    "শূন্য এক দুই তিন চার পাঁচ ছয় সাত আট নয় "
    "দশ এগারো বারো তেরো চৌদ্দ পনেরো ষোলো সতেরো আঠারো উনিশ "
    "বিশ একুশ বাইশ তেইশ চব্বিশ পঁচিশ ছাব্বিশ সাতাশ আটাশ উনত্রিশ "
    "ত্রিশ একত্রিশ বত্রিশ তেত্রিশ চৌত্রিশ পঁয়ত্রিশ ছত্রিশ সাঁইত্রিশ আটত্রিশ উনচল্লিশ "
    "চল্লিশ একচল্লিশ বিয়াল্লিশ তেতাল্লিশ চুয়াল্লিশ পঁয়তাল্লিশ ছেচল্লিশ সাতচল্লিশ "
    "আটচল্লিশ উনপঞ্চাশ "
    "পঞ্চাশ একান্ন বাহান্ন তিপ্পান্ন চুয়ান্ন পঞ্চান্ন ছাপ্পান্ন সাতান্ন আটান্ন উনষাট "
    "ষাট একষট্টি বাষট্টি তেষট্টি চৌষট্টি পঁয়ষট্টি ছেষট্টি সাতষট্টি আটষট্টি উনসত্তর "
    "সত্তর একাত্তর বাহাত্তর তিয়াত্তর চুয়াত্তর পঁচাত্তর ছিয়াত্তর "
    "সাতাত্তর আটাত্তর উনআশি "
    "আশি একাশি বিরাশি তিরাশি চুরাশি পঁচাশি ছিয়াশি সাতাশি অষ্টাশি উননব্বই "
    "নব্বই একানব্বই বিরানব্বই তিরানব্বই চুরানব্বই পঁচানব্বই ছিয়ানব্বই সাতানব্বই "
    "আটানব্বই নিরানব্বই"
)

#: Words for 0..99, NFC-normalized (some Bangla letters are NFC exclusions).
UNITS = tuple(unicodedata.normalize("NFC", w) for w in _BELOW_HUNDRED.split())

HUNDRED_SUFFIX = "শো"
#: Indian numbering scale, largest first.
SCALES = ((10**7, "কোটি"), (10**5, "লাখ"), (10**3, "হাজার"))

assert len(UNITS) == 100  # nosec B101


@dataclass(frozen=True)
class NormConfig:
    """
    Text normalization settings.

    Attributes:
        year_range: Inclusive range of 4-digit numbers read as calendar years.
        allowed_punct: Punctuation kept by :func:`filter_bengali`.
        strip_joiners: Remove ZWNJ/ZWJ in :func:`clean_unicode`.
    """

    year_range: Tuple[int, int] = (1000, 2099)
    allowed_punct: str = "।.,?!-"
    strip_joiners: bool = True

    def __post_init__(self):
        object.__setattr__(self, "year_range", tuple(self.year_range))
        if len(self.year_range) != 2 or self.year_range[0] > self.year_range[1]:
            raise ValueError("year_range must be an interval [lower, upper]")


def _hundreds(n: int) -> str:
    words = []
    if n >= 100:
        words.append(UNITS[n // 100] + HUNDRED_SUFFIX)
    if n % 100 or not words:
        words.append(UNITS[n % 100])
    return " ".join(words)


def cardinal_words(n: int) -> str:
    """
    Standard Bangla cardinal reading of a non-negative integer.

    Example:
        >>> cardinal_words(2500)
        'দুই হাজার পাঁচশো'
    """
    if n < 1000:
        return _hundreds(n)
    for value, name in SCALES:
        if n >= value:
            rest = n % value
            head = cardinal_words(n // value) + " " + name
            return head if rest == 0 else head + " " + cardinal_words(rest)
    raise AssertionError("unreachable")  # pragma: no cover


def year_words(n: int) -> str:
    """
    Calendar-year reading of a 4-digit number: century pair + "শো" + remainder.

    Example:
        >>> year_words(1971)
        'উনিশশো একাত্তর'
    """
    century, rest = divmod(n, 100)
    head = UNITS[century] + HUNDRED_SUFFIX
    return head if rest == 0 else head + " " + UNITS[rest]


def digits_to_bangla_words(text: str, cfg: NormConfig) -> str:
    """
    Replace every maximal ASCII digit run with its Bangla reading.

    Four-digit runs within ``cfg.year_range`` are read as years, everything else
    as a cardinal. Runs longer than :data:`MAX_DIGITS` are left unchanged and
    logged as a warning. A single space separates the inserted words from
    adjacent non-space characters.
    """
    lower, upper = cfg.year_range

    def _replace(match):
        run = match.group(0)
        if len(run) > MAX_DIGITS:
            _log.warning("Digit run of %s digits left unconverted: %s", len(run), run)
            return run
        value = int(run)
        if len(run) == 4 and lower <= value <= upper:
            words = year_words(value)
        else:
            words = cardinal_words(value)
        start, end = match.span()
        if start > 0 and not text[start - 1].isspace():
            words = " " + words
        if end < len(text) and not text[end].isspace():
            words = words + " "
        return words

    return _digits_re.sub(_replace, text)


def _allowed(char: str, cfg: NormConfig) -> bool:
    return (
        "ঀ" <= char <= "৿"
        or "0" <= char <= "9"
        or char.isspace()
        or char in cfg.allowed_punct
    )


def filter_bengali(text: str, cfg: NormConfig) -> str:
    """Delete every character outside the Bengali block, ASCII digits,
    whitespace and the allowed punctuation. The result is
    NFC-normalized."""
    kept = "".join(char for char in text if _allowed(char, cfg))
    return unicodedata.normalize("NFC", kept)


def collapse_whitespace(text: str) -> str:
    """Turn every whitespace run into one space and trim both ends."""
    return _whitespace_re.sub(" ", text).strip()


def clean_unicode(text: str, cfg: NormConfig) -> str:
    """
    Remove zero-width characters, then NFC-normalize.

    U+200B and U+FEFF are always removed; ZWNJ and ZWJ only when
    ``cfg.strip_joiners`` is set.
    """
    removed = ZERO_WIDTH + JOINERS if cfg.strip_joiners else ZERO_WIDTH
    for char in removed:
        text = text.replace(char, "")
    return unicodedata.normalize("NFC", text)


def normalize_transcript(text: str, cfg: NormConfig) -> str:
    """Full transcript normalization; idempotent."""
    return collapse_whitespace(
        filter_bengali(digits_to_bangla_words(clean_unicode(text, cfg), cfg), cfg)
    )
