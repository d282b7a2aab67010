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
Speaker segments and the policies applied to them.

Annotations come in as CSV rows of ``start,end,speaker`` with ``HH:MM:SS``
times; system output goes out as a JSON array of segments.
"""

import csv
import io
import json
import logging
import re
from dataclasses import dataclass
from typing import List, Sequence

from dhvani.lib.exceptions import AnnotationError, FormatError

_log = logging.getLogger(__name__)

#: Default minimum duration of a system segment.
MIN_SEGMENT_S = 0.3

# Segments this close to the minimum duration are kept, so 0.3 s survives
# float subtraction of its bounds.
_DURATION_EPSILON = 1e-9

_time_re = re.compile(r"^(\d+):([0-5]?\d):([0-5]?\d(?:\.\d+)?)$")


@dataclass(frozen=True)
class DiarizationSegment:
    """
    A speaker turn.

    Attributes:
        start_s: Start in seconds, non-negative.
        end_s: End in seconds, after ``start_s``.
        speaker: Speaker label, non-empty.
    """

    start_s: float
    end_s: float
    speaker: str

    def __post_init__(self):
        if self.start_s < 0:
            raise ValueError(f"negative start {self.start_s}")
        if self.end_s <= self.start_s:
            raise ValueError("end before start")
        if not self.speaker:
            raise ValueError("empty speaker label")

    @property
    def duration_s(self) -> float:
        return self.end_s - self.start_s

    def to_dict(self) -> dict:
        return {
            "start": round(self.start_s, 3),
            "end": round(self.end_s, 3),
            "speaker": self.speaker,
        }


def parse_time(value: str) -> float:
    """
    Convert ``HH:MM:SS`` (optionally with fractional seconds) to seconds.

    Raises:
        ValueError: If the value is not a valid time.
    """
    match = _time_re.match(value.strip())
    if match is None:
        raise ValueError(f"malformed time {value!r}")
    hours, minutes, seconds = match.groups()
    return int(hours) * 3600 + int(minutes) * 60 + float(seconds)


def _is_header(row: Sequence[str]) -> bool:
    try:
        parse_time(row[0])
    except ValueError:
        try:
            float(row[0])
        except ValueError:
            return True
    return False


def parse_annotation_csv(content: str) -> List[DiarizationSegment]:
    """
    Parse a ``start,end,speaker`` annotation.

    A first row whose first field is not a time is taken for a header and
    skipped; blank rows are ignored; columns after the third are ignored.

    Args:
        content: The CSV text.

    Returns:
        The segments in file order.

    Raises:
        AnnotationError: On a malformed time, a missing field or a segment
            ending before it starts. Rows and columns are reported 1-based.
    """
    segments = []
    reader = csv.reader(io.StringIO(content))
    for row_number, row in enumerate(reader, start=1):
        if not row or not "".join(row).strip():
            continue
        if row_number == 1 and _is_header(row):
            _log.debug("Skipping CSV header %s", row)
            continue
        if len(row) < 3:
            raise AnnotationError(
                row_number, None, f"expected 3 fields, got {len(row)}"
            )

        times = []
        for column in (1, 2):
            try:
                times.append(parse_time(row[column - 1]))
            except ValueError as err:
                raise AnnotationError(row_number, column, str(err)) from err
        speaker = row[2].strip()
        if not speaker:
            raise AnnotationError(row_number, 3, "empty speaker label")
        if times[1] <= times[0]:
            raise AnnotationError(row_number, None, "end before start")
        segments.append(DiarizationSegment(times[0], times[1], speaker))
    return segments


def resolve_overlaps(
    segments: Sequence[DiarizationSegment],
) -> List[DiarizationSegment]:
    """
    Make segments pairwise disjoint with a first-speaker policy.

    Segments are taken by start time, ties in input order. A segment
    overlapping an earlier one loses the overlapped region: its start moves to
    the end of the earlier speech, and it is dropped when nothing is left. The
    union of the input intervals is preserved.
    """
    ordered = sorted(enumerate(segments), key=lambda item: (item[1].start_s, item[0]))
    resolved: List[DiarizationSegment] = []
    cursor = 0.0
    for _, segment in ordered:
        start = max(segment.start_s, cursor)
        if start >= segment.end_s:
            _log.debug("Dropping %s, fully overlapped", segment)
            continue
        resolved.append(DiarizationSegment(start, segment.end_s, segment.speaker))
        cursor = max(cursor, segment.end_s)
    return resolved


def filter_min_duration(
    segments: Sequence[DiarizationSegment], min_s: float = MIN_SEGMENT_S
) -> List[DiarizationSegment]:
    """Keep the segments lasting at least ``min_s`` seconds, in order."""
    return [s for s in segments if s.duration_s >= min_s - _DURATION_EPSILON]


def speech_duration(segments: Sequence[DiarizationSegment]) -> float:
    """Sum of the segment durations."""
    return sum(s.duration_s for s in segments)


def segments_to_json(segments: Sequence[DiarizationSegment]) -> str:
    """
    Render segments as a compact JSON array.

    Example:
        >>> segments_to_json([DiarizationSegment(1.0, 5.0, "S1")])
        '[{"start":1.0,"end":5.0,"speaker":"S1"}]'
    """
    return json.dumps(
        [s.to_dict() for s in segments], ensure_ascii=False, separators=(",", ":")
    )


def segments_from_json(content: str) -> List[DiarizationSegment]:
    """
    Parse the output of :func:`segments_to_json`.

    Raises:
        FormatError: If the text is not an array of valid segments.
    """
    try:
        items = json.loads(content)
        return [
            DiarizationSegment(float(i["start"]), float(i["end"]), str(i["speaker"]))
            for i in items
        ]
    except (ValueError, KeyError, TypeError) as err:
        raise FormatError(f"invalid segment JSON: {err}") from err
