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
Sequential fuzzy alignment of chunk hypotheses against a full transcript.

A pointer walks the ground-truth word list in reading order. For every chunk
the best matching word span is searched in a small box around the pointer
(start offset and span length both vary a few words), scored with the
normalized indel similarity of the space-joined span and the hypothesis.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from rapidfuzz.distance import Indel

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlignConfig:
    """
    Alignment search settings.

    Attributes:
        window_words: The span start varies by up to this many words around
            the pointer.
        span_delta_words: The span length varies by up to this many words
            around the hypothesis length.
        low_confidence_threshold: Spans scoring below this are flagged.
    """

    window_words: int = 5
    span_delta_words: int = 3
    low_confidence_threshold: float = 50.0

    def __post_init__(self):
        if self.window_words < 0 or self.span_delta_words < 0:
            raise ValueError("window_words and span_delta_words must be >= 0")


@dataclass(frozen=True)
class AlignedChunk:
    """
    The ground-truth word span matched to one chunk.

    ``gt_start_word == gt_end_word`` marks an empty sentinel span, emitted when
    the transcript is exhausted or no span could advance past the previous one.
    """

    chunk_index: int
    gt_start_word: int
    gt_end_word: int
    score: float
    low_confidence: bool

    @property
    def empty(self) -> bool:
        return self.gt_start_word >= self.gt_end_word

    def to_dict(self, uri: str, gt_words: Sequence[str]) -> dict:
        """Alignment record, including the matched ground-truth text."""
        return {
            "uri": uri,
            "chunk_index": self.chunk_index,
            "gt_start_word": self.gt_start_word,
            "gt_end_word": self.gt_end_word,
            "score": round(self.score, 4),
            "low_confidence": self.low_confidence,
            "text": " ".join(gt_words[self.gt_start_word : self.gt_end_word]),
        }


def indel_ratio(a: str, b: str) -> float:
    """
    Normalized indel similarity of two strings, in [0, 100].

    Equals ``100 * 2 * LCS(a, b) / (len(a) + len(b))`` over Unicode code points;
    two empty strings score 100.
    """
    total = len(a) + len(b)
    if total == 0:
        return 100.0
    common = total - Indel.distance(a, b)
    return 100.0 * common / total


def search_key(
    start: int, length: int, pointer: int, hyp_len: int
) -> Tuple[int, int, int]:
    """
    Tie-break key among spans of equal score; smaller is preferred.

    Closest start to the pointer first, then length closest to the hypothesis
    word count, then the earlier start.
    """
    return (abs(start - pointer), abs(length - hyp_len), start)


def best_span(
    gt_words: Sequence[str], hyp: str, pointer: int, cfg: AlignConfig
) -> Tuple[int, int, float]:
    """
    Search the box around ``pointer`` for the span best matching ``hyp``.

    Returns:
        ``(start, length, score)`` of the winning span; the length is already
        clamped at the transcript end.
    """
    hyp_len = len(hyp.split())
    total = len(gt_words)
    best = None
    lo_start = max(0, pointer - cfg.window_words)
    hi_start = min(total - 1, pointer + cfg.window_words)
    lo_len = max(1, hyp_len - cfg.span_delta_words)
    hi_len = hyp_len + cfg.span_delta_words
    for start in range(lo_start, hi_start + 1):
        seen = set()
        for length in range(lo_len, hi_len + 1):
            length = min(length, total - start)
            if length in seen:
                continue
            seen.add(length)
            score = indel_ratio(" ".join(gt_words[start : start + length]), hyp)
            key = (-score,) + search_key(start, length, pointer, hyp_len)
            if best is None or key < best[0]:
                best = (key, start, length, score)
    assert best is not None  # nosec B101: the box is never empty for pointer < total
    return best[1], best[2], best[3]


def align_chunks(
    gt_words: Sequence[str], hyps: Sequence[str], cfg: AlignConfig
) -> List[AlignedChunk]:
    """
    Assign every chunk hypothesis a ground-truth word span, in reading order.

    Args:
        gt_words: The full ground-truth transcript split into words.
        hyps: Chunk hypotheses ordered by chunk index.
        cfg: Search settings.

    Returns:
        One :class:`AlignedChunk` per hypothesis. Spans never overlap and never
        go backwards: a winning span starting before the previous span end is
        clipped, and one that does not reach past it becomes an empty sentinel.
        Once the pointer reaches the transcript end the remaining chunks get
        empty sentinels at the transcript end.
    """
    if not gt_words:
        raise ValueError("gt_words must not be empty")

    total = len(gt_words)
    pointer = 0
    aligned = []
    for index, hyp in enumerate(hyps):
        if pointer >= total:
            _log.warning("Transcript exhausted before chunk %s", index)
            aligned.append(AlignedChunk(index, total, total, 0.0, True))
            continue

        start, length, score = best_span(gt_words, hyp, pointer, cfg)
        end = start + length
        low = score < cfg.low_confidence_threshold
        if end <= pointer:
            _log.debug("Chunk %s matched behind the pointer, emitting sentinel", index)
            aligned.append(AlignedChunk(index, pointer, pointer, score, True))
            continue

        aligned.append(AlignedChunk(index, max(start, pointer), end, score, low))
        pointer = end

    flagged = sum(1 for chunk in aligned if chunk.low_confidence)
    if flagged:
        _log.info("%s of %s chunks aligned with low confidence", flagged, len(aligned))
    return aligned


def hypotheses_from_records(records: Iterable[Mapping[str, Any]]) -> List[str]:
    """
    Order chunk hypotheses read from ``{"chunk_index", "text"}`` records.

    Chunks without a record get an empty hypothesis.

    Raises:
        ValueError: If a record has a negative or duplicate chunk index.
    """
    texts: Dict[int, str] = {}
    for record in records:
        index = int(record["chunk_index"])
        if index < 0 or index in texts:
            raise ValueError(f"bad or duplicate chunk_index {index}")
        texts[index] = str(record.get("text", ""))
    if not texts:
        return []
    return [texts.get(index, "") for index in range(max(texts) + 1)]
