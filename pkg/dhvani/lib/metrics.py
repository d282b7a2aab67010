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
Scoring of system output: word error rate, diarization error rate and
real-time factor.
"""

import logging
import unicodedata
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from dhvani.lib.diarization.segments import DiarizationSegment, resolve_overlaps
from dhvani.lib.exceptions import MetricError

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WerReport:
    """
    Word error counts of one hypothesis.

    Attributes:
        substitutions: Substituted reference words.
        deletions: Reference words missing from the hypothesis.
        insertions: Extra hypothesis words.
        ref_words: Number of reference words.
    """

    substitutions: int
    deletions: int
    insertions: int
    ref_words: int

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def wer(self) -> float:
        return self.errors / self.ref_words

    def to_dict(self) -> dict:
        return {
            "S": self.substitutions,
            "D": self.deletions,
            "I": self.insertions,
            "N": self.ref_words,
            "wer": self.wer,
        }


@dataclass(frozen=True)
class CorpusWerReport:
    """
    Word error rate over many files.

    ``wer`` is the micro average (all errors over all reference words),
    ``macro_wer`` the mean of the per-file rates.
    """

    files: Dict[str, WerReport]

    def __post_init__(self):
        if not self.files:
            raise MetricError("no file to score")

    @property
    def total(self) -> WerReport:
        reports = list(self.files.values())
        return WerReport(
            sum(r.substitutions for r in reports),
            sum(r.deletions for r in reports),
            sum(r.insertions for r in reports),
            sum(r.ref_words for r in reports),
        )

    @property
    def wer(self) -> float:
        return self.total.wer

    @property
    def macro_wer(self) -> float:
        return float(np.mean([r.wer for r in self.files.values()]))

    def to_dict(self) -> dict:
        summary = self.total.to_dict()
        summary["macro_wer"] = self.macro_wer
        return {
            "files": {name: r.to_dict() for name, r in self.files.items()},
            "total": summary,
        }


def tokenize(text: str) -> List[str]:
    """NFC-normalize and split on whitespace."""
    return unicodedata.normalize("NFC", text).split()


def edit_counts(ref: Sequence[str], hyp: Sequence[str]) -> Tuple[int, int, int]:
    """
    Substitutions, deletions and insertions of a minimal word alignment.

    Every cell of the table holds ``(cost, deletions)`` and is minimized
    lexicographically: among alignments of minimal cost the one with the fewest
    deletions, hence the most substitutions, wins. That makes the three counts
    unique.
    """
    rows, cols = len(ref), len(hyp)
    previous = [(j, 0) for j in range(cols + 1)]
    for i in range(1, rows + 1):
        current = [(i, i)]
        for j in range(1, cols + 1):
            diag_cost, diag_del = previous[j - 1]
            if ref[i - 1] != hyp[j - 1]:
                diag_cost += 1
            up_cost, up_del = previous[j]
            left_cost, left_del = current[j - 1]
            current.append(
                min(
                    (diag_cost, diag_del),
                    (up_cost + 1, up_del + 1),
                    (left_cost + 1, left_del),
                )
            )
        previous = current
    cost, deletions = previous[cols]
    insertions = deletions - (rows - cols)
    return cost - deletions - insertions, deletions, insertions


def wer(ref: str, hyp: str) -> WerReport:
    """
    Word error rate of a hypothesis, ``(S + D + I) / N``.

    Raises:
        MetricError: If the reference holds no word.
    """
    ref_words = tokenize(ref)
    if not ref_words:
        raise MetricError("N=0 undefined")
    substitutions, deletions, insertions = edit_counts(ref_words, tokenize(hyp))
    return WerReport(substitutions, deletions, insertions, len(ref_words))


def corpus_wer(pairs: Iterable[Tuple[str, str, str]]) -> CorpusWerReport:
    """
    Score ``(name, ref, hyp)`` triples.

    Raises:
        MetricError: If there is no triple or a reference holds no word.
    """
    return CorpusWerReport({name: wer(ref, hyp) for name, ref, hyp in pairs})


@dataclass(frozen=True)
class DerReport:
    """
    Diarization error components, in seconds.

    Attributes:
        false_alarm: Hypothesis speech where the reference has less speakers.
        missed: Reference speech the hypothesis has less speakers for.
        confusion: Speech attributed to a speaker not mapped to the reference one.
        total: Reference speech inside the scoring region.
        mapping: Hypothesis speaker to reference speaker.
    """

    false_alarm: float
    missed: float
    confusion: float
    total: float
    mapping: Dict[str, str] = field(default_factory=dict)

    @property
    def der(self) -> float:
        return (self.false_alarm + self.missed + self.confusion) / self.total

    def to_dict(self) -> dict:
        return {
            "FA": self.false_alarm,
            "MISS": self.missed,
            "CONF": self.confusion,
            "TOTAL": self.total,
            "der": self.der,
            "mapping": dict(self.mapping),
        }


def _speaker_order(segments: Sequence[DiarizationSegment]) -> List[str]:
    return list(dict.fromkeys(s.speaker for s in segments))


def _regions(
    ref: Sequence[DiarizationSegment],
    hyp: Sequence[DiarizationSegment],
    collar_s: float,
    uem: Optional[Tuple[float, float]],
) -> List[Tuple[float, frozenset, frozenset]]:
    """
    Sweep every boundary and return the scored elementary regions as
    ``(duration, reference speakers, hypothesis speakers)``.
    """
    events: List[Tuple[float, str, str, int]] = []
    for s in ref:
        events += [(s.start_s, "ref", s.speaker, 1), (s.end_s, "ref", s.speaker, -1)]
        if collar_s > 0:
            for bound in (s.start_s, s.end_s):
                events += [
                    (bound - collar_s, "collar", "", 1),
                    (bound + collar_s, "collar", "", -1),
                ]
    for s in hyp:
        events += [(s.start_s, "hyp", s.speaker, 1), (s.end_s, "hyp", s.speaker, -1)]
    inside = uem is None
    if uem is not None:
        events += [(uem[0], "uem", "", 1), (uem[1], "uem", "", -1)]
    events.sort(key=lambda e: e[0])

    counts: Dict[str, Dict[str, int]] = {
        "ref": defaultdict(int),
        "hyp": defaultdict(int),
    }
    collars = 0
    regions = []
    for index, (time, kind, speaker, delta) in enumerate(events):
        if kind == "collar":
            collars += delta
        elif kind == "uem":
            inside = delta > 0
        else:
            counts[kind][speaker] += delta
        if index + 1 == len(events):
            break
        duration = events[index + 1][0] - time
        if duration <= 0 or collars > 0 or not inside:
            continue
        active_ref = frozenset(k for k, v in counts["ref"].items() if v > 0)
        active_hyp = frozenset(k for k, v in counts["hyp"].items() if v > 0)
        if active_ref or active_hyp:
            regions.append((duration, active_ref, active_hyp))
    return regions


def optimal_mapping(
    overlap: np.ndarray, ref_speakers: Sequence[str], hyp_speakers: Sequence[str]
) -> Dict[str, str]:
    """
    One-to-one hypothesis to reference speaker mapping maximizing the total
    overlap; pairs without overlap are left unmapped.

    Args:
        overlap: ``overlap[r, h]`` is the co-speaking time of the pair.
        ref_speakers: Row labels.
        hyp_speakers: Column labels.
    """
    if overlap.size == 0:
        return {}
    rows, cols = linear_sum_assignment(overlap, maximize=True)
    return {
        hyp_speakers[c]: ref_speakers[r]
        for r, c in zip(rows, cols)
        if overlap[r, c] > 0
    }


def der(
    ref: Sequence[DiarizationSegment],
    hyp: Sequence[DiarizationSegment],
    collar_s: float = 0.0,
    uem: Optional[Tuple[float, float]] = None,
) -> DerReport:
    """
    Diarization error rate, ``(FA + MISS + CONF) / TOTAL``.

    Computed with exact interval arithmetic: within every region where the
    sets of active reference speakers R and hypothesis speakers H are
    constant, ``MISS += d * max(0, |R| - |H|)``,
    ``FA += d * max(0, |H| - |R|)`` and
    ``CONF += d * (min(|R|, |H|) - correctly mapped pairs)``.

    Args:
        ref: Reference segments; overlaps are resolved first-speaker first.
        hyp: Hypothesis segments, overlaps allowed.
        collar_s: Half width of the unscored zone around every reference
            boundary.
        uem: Optional ``(start, end)`` scoring region; everything is scored
            otherwise.

    Raises:
        MetricError: If no reference speech falls in the scoring region.
    """
    if collar_s < 0:
        raise MetricError("collar must be non-negative")
    ref = resolve_overlaps(ref)
    regions = _regions(ref, hyp, collar_s, uem)

    ref_speakers = _speaker_order(ref)
    hyp_speakers = _speaker_order(hyp)
    ref_index = {s: i for i, s in enumerate(ref_speakers)}
    hyp_index = {s: i for i, s in enumerate(hyp_speakers)}
    overlap = np.zeros((len(ref_speakers), len(hyp_speakers)))
    for duration, active_ref, active_hyp in regions:
        for r in active_ref:
            for h in active_hyp:
                overlap[ref_index[r], hyp_index[h]] += duration
    mapping = optimal_mapping(overlap, ref_speakers, hyp_speakers)

    false_alarm = missed = confusion = total = 0.0
    for duration, active_ref, active_hyp in regions:
        n_ref, n_hyp = len(active_ref), len(active_hyp)
        correct = sum(1 for h in active_hyp if mapping.get(h) in active_ref)
        total += duration * n_ref
        missed += duration * max(0, n_ref - n_hyp)
        false_alarm += duration * max(0, n_hyp - n_ref)
        confusion += duration * (min(n_ref, n_hyp) - correct)
    if total <= 0:
        raise MetricError("no reference speech")
    return DerReport(false_alarm, missed, confusion, total, mapping)


@dataclass(frozen=True)
class CorpusDerReport:
    """Diarization error over many recordings; components are summed first."""

    files: Dict[str, DerReport]

    def __post_init__(self):
        if not self.files:
            raise MetricError("no recording to score")

    @property
    def total(self) -> DerReport:
        reports = list(self.files.values())
        return DerReport(
            sum(r.false_alarm for r in reports),
            sum(r.missed for r in reports),
            sum(r.confusion for r in reports),
            sum(r.total for r in reports),
        )

    @property
    def der(self) -> float:
        return self.total.der

    def to_dict(self) -> dict:
        summary = self.total.to_dict()
        del summary["mapping"]
        return {
            "files": {uri: r.to_dict() for uri, r in self.files.items()},
            "total": summary,
        }


@dataclass(frozen=True)
class RtfReport:
    """
    Real-time factor.

    Attributes:
        inference_time_s: Wall time spent on inference.
        audio_duration_s: Duration of the processed audio.
    """

    inference_time_s: float
    audio_duration_s: float

    @property
    def rtf(self) -> float:
        return self.inference_time_s / self.audio_duration_s

    def to_dict(self) -> dict:
        return {"T": self.inference_time_s, "D": self.audio_duration_s, "rtf": self.rtf}


def rtf(inference_time_s: float, audio_duration_s: float) -> RtfReport:
    """
    Real-time factor, ``T / D``; below 1 is faster than real time.

    Raises:
        MetricError: If either value is not positive.
    """
    if inference_time_s <= 0 or audio_duration_s <= 0:
        raise MetricError(
            f"inference time and audio duration must be positive, "
            f"got {inference_time_s} and {audio_duration_s}"
        )
    return RtfReport(inference_time_s, audio_duration_s)
