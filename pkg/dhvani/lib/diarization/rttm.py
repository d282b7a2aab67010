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
RTTM, UEM and LST files.

Only ``SPEAKER`` RTTM records are written and read. All times are printed
with exactly three decimals.
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from dhvani.lib.diarization.segments import DiarizationSegment
from dhvani.lib.exceptions import FormatError, RttmParseError

_log = logging.getLogger(__name__)

NA = "<NA>"
SPEAKER = "SPEAKER"

# Field layout of a SPEAKER record.
RTTM_FIELDS = (
    "type",
    "uri",
    "channel",
    "onset",
    "duration",
    "ortho",
    "stype",
    "speaker",
    "confidence",
    "lookahead",
)


def _check_uri(uri: str) -> None:
    if not uri or any(char.isspace() for char in uri):
        raise FormatError(f"invalid uri {uri!r}: empty or containing whitespace")


@dataclass(frozen=True)
class RttmLine:
    """A ``SPEAKER`` record."""

    uri: str
    onset_s: float
    duration_s: float
    speaker: str

    def __post_init__(self):
        if self.duration_s <= 0:
            raise ValueError("duration must be positive")

    @classmethod
    def from_segment(cls, uri: str, segment: DiarizationSegment) -> "RttmLine":
        duration = segment.end_s - segment.start_s
        return cls(uri, segment.start_s, duration, segment.speaker)

    def to_segment(self) -> DiarizationSegment:
        end = self.onset_s + self.duration_s
        return DiarizationSegment(self.onset_s, end, self.speaker)

    def render(self) -> str:
        return (
            f"{SPEAKER} {self.uri} 1 {self.onset_s:.3f} {self.duration_s:.3f} "
            f"{NA} {NA} {self.speaker} {NA} {NA}"
        )


@dataclass(frozen=True)
class UemLine:
    """A scoring region of one recording."""

    uri: str
    onset_s: float
    offset_s: float

    def __post_init__(self):
        if self.offset_s <= self.onset_s:
            raise ValueError("offset must be after onset")

    def render(self) -> str:
        return f"{self.uri} 1 {self.onset_s:.3f} {self.offset_s:.3f}"


def write_rttm(uri: str, segments: Sequence[DiarizationSegment]) -> str:
    """
    Render the segments of a recording as RTTM, one line per segment by onset.

    Segments whose duration renders as ``0.000`` are left out.

    Example:
        >>> write_rttm("file1", [DiarizationSegment(1.0, 5.0, "SPK1")])
        'SPEAKER file1 1 1.000 4.000 <NA> <NA> SPK1 <NA> <NA>\\n'

    Raises:
        FormatError: If the uri is empty or contains whitespace.
    """
    _check_uri(uri)
    lines = []
    for segment in sorted(segments, key=lambda s: s.start_s):
        line = RttmLine.from_segment(uri, segment)
        if round(line.duration_s, 3) <= 0:
            _log.debug("Skipping %s in %s, shorter than a millisecond", segment, uri)
            continue
        lines.append(line.render() + "\n")
    return "".join(lines)


def _parse_field(line_number: int, fields: Sequence[str], name: str) -> float:
    value = fields[RTTM_FIELDS.index(name)]
    try:
        return float(value)
    except ValueError as err:
        raise RttmParseError(line_number, name, f"not a number: {value!r}") from err


def parse_rttm(content: str) -> Dict[str, List[DiarizationSegment]]:
    """
    Parse the ``SPEAKER`` records of an RTTM file.

    Other record types, blank lines and ``;;`` comments are skipped.

    Returns:
        The segments of every recording, in file order of first appearance.

    Raises:
        RttmParseError: On a malformed ``SPEAKER`` record.
    """
    recordings: Dict[str, List[DiarizationSegment]] = OrderedDict()
    for line_number, line in enumerate(content.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0].startswith(";;") or fields[0] != SPEAKER:
            continue
        if len(fields) < RTTM_FIELDS.index("speaker") + 1:
            raise RttmParseError(line_number, "speaker", "missing fields")
        onset = _parse_field(line_number, fields, "onset")
        duration = _parse_field(line_number, fields, "duration")
        if onset < 0:
            raise RttmParseError(line_number, "onset", "negative onset")
        if duration <= 0:
            raise RttmParseError(line_number, "duration", "must be positive")
        record = RttmLine(fields[1], onset, duration, fields[7])
        recordings.setdefault(record.uri, []).append(record.to_segment())
    return recordings


def write_uem(uri: str, duration_s: float) -> str:
    """
    Render the scoring region ``[0, duration_s]`` of a recording.

    Example:
        >>> write_uem("file1", 120.0)
        'file1 1 0.000 120.000\\n'

    Raises:
        FormatError: If the duration is not positive or the uri is invalid.
    """
    _check_uri(uri)
    if duration_s <= 0:
        raise FormatError(f"duration of {uri} must be positive, got {duration_s}")
    return UemLine(uri, 0.0, duration_s).render() + "\n"


def parse_uem(content: str) -> Dict[str, Tuple[float, float]]:
    """
    Parse a UEM file into one ``(onset, offset)`` scoring region per recording.

    Raises:
        FormatError: On a malformed line.
    """
    regions = OrderedDict()
    for line_number, line in enumerate(content.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0].startswith(";;"):
            continue
        try:
            uem = UemLine(fields[0], float(fields[2]), float(fields[3]))
        except (IndexError, ValueError) as err:
            raise FormatError(
                f"line {line_number}: malformed UEM record: {err}"
            ) from err
        regions[uem.uri] = (uem.onset_s, uem.offset_s)
    return regions


def write_lst(uris: Sequence[str]) -> str:
    """
    Render a list of recording identifiers, one per line.

    Raises:
        FormatError: If the list is empty or a uri contains whitespace.
    """
    if not uris:
        raise FormatError("no uri to list")
    for uri in uris:
        _check_uri(uri)
    return "".join(uri + "\n" for uri in uris)


def parse_lst(content: str) -> List[str]:
    """Read the identifiers of an LST file, skipping blank lines."""
    return [line.strip() for line in content.splitlines() if line.strip()]
