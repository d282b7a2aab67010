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
"""The Dhvani diarization file formats API."""

import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from dhvani.lib.diarization.manifest import ManifestPaths
from dhvani.lib.diarization.segments import DiarizationSegment
from dhvani.lib.exceptions import DhvaniPluginException, FormatError

_log = logging.getLogger(__name__)

Recordings = Dict[str, List[DiarizationSegment]]


@dataclass
class Corpus:
    """
    Everything a format may need to render a set of recordings.

    Attributes:
        segments: The segments of every recording, by uri, in corpus order.
        durations: Known recording durations; a missing duration falls back to
            the end of the last segment.
        splits: Recording identifiers of every split, for the manifest.
        paths: Location of the protocol files, for the manifest.
    """

    segments: Recordings = field(default_factory=OrderedDict)
    durations: Dict[str, float] = field(default_factory=dict)
    splits: Dict[str, List[str]] = field(default_factory=dict)
    paths: Optional[ManifestPaths] = None

    @property
    def uris(self) -> List[str]:
        return list(self.segments)

    def duration(self, uri: str) -> float:
        """Duration of a recording in seconds."""
        if uri in self.durations:
            return self.durations[uri]
        segments = self.segments.get(uri)
        if not segments:
            raise FormatError(f"unknown duration for {uri}")
        _log.debug("No duration for %s, using the last segment end", uri)
        return max(s.end_s for s in segments)


class BaseFormat(object):
    """
    The base class that all the diarization file formats should extend.

    Attributes:
        name (str): The format name, as given on the command line.
        extension (str): File extension, without the dot.
        readable (bool): Whether :meth:`parse` is implemented.
        writable (bool): Whether :meth:`render` is implemented.
    """

    name: str
    extension: str
    readable = False
    writable = False

    @classmethod
    def parse(cls, content: str, uri: str) -> Recordings:
        """
        Read recordings from a file.

        Args:
            content: The file content.
            uri: Identifier used for formats that don't carry one.

        Returns:
            The segments of every recording in the file.
        """
        raise DhvaniPluginException(f"The {cls.name} format can't be read")

    @classmethod
    def render(cls, corpus: Corpus) -> str:
        """Render the corpus in this format."""
        raise DhvaniPluginException(f"The {cls.name} format can't be written")
