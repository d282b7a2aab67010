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

from dhvani.lib.diarization import rttm
from dhvani.lib.diarization.formats import BaseFormat


class RttmFormat(BaseFormat):
    """``SPEAKER`` records of every recording, recordings in corpus order."""

    name = "rttm"
    extension = "rttm"
    readable = True
    writable = True

    @classmethod
    def parse(cls, content, uri):
        return rttm.parse_rttm(content)

    @classmethod
    def render(cls, corpus):
        return "".join(
            rttm.write_rttm(uri, segments) for uri, segments in corpus.segments.items()
        )


class UemFormat(BaseFormat):
    """One scoring region from 0 to the recording duration per recording."""

    name = "uem"
    extension = "uem"
    writable = True

    @classmethod
    def render(cls, corpus):
        return "".join(rttm.write_uem(uri, corpus.duration(uri)) for uri in corpus.uris)


class LstFormat(BaseFormat):
    name = "lst"
    extension = "lst"
    writable = True

    @classmethod
    def render(cls, corpus):
        return rttm.write_lst(corpus.uris)
