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
JSON system output.

A single recording is an array of ``{"start", "end", "speaker"}`` objects;
several recordings are an object mapping every uri to such an array.
"""

import json

from dhvani.lib.diarization.formats import BaseFormat
from dhvani.lib.diarization.segments import segments_from_json, segments_to_json
from dhvani.lib.exceptions import FormatError


class JsonFormat(BaseFormat):
    name = "json"
    extension = "json"
    readable = True
    writable = True

    @classmethod
    def parse(cls, content, uri):
        try:
            document = json.loads(content)
        except ValueError as err:
            raise FormatError(f"invalid segment JSON: {err}") from err
        if isinstance(document, dict):
            return {
                key: segments_from_json(json.dumps(value))
                for key, value in document.items()
            }
        return {uri: segments_from_json(content)}

    @classmethod
    def render(cls, corpus):
        if len(corpus.segments) == 1:
            (segments,) = corpus.segments.values()
            return segments_to_json(segments)
        return (
            "{"
            + ",".join(
                json.dumps(uri, ensure_ascii=False) + ":" + segments_to_json(segments)
                for uri, segments in corpus.segments.items()
            )
            + "}"
        )
