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

from dhvani.lib.diarization.formats import BaseFormat
from dhvani.lib.diarization.manifest import emit_corpus_manifest
from dhvani.lib.exceptions import FormatError


class ManifestFormat(BaseFormat):
    """The YAML protocol manifest; needs the corpus splits and paths."""

    name = "manifest"
    extension = "yml"
    writable = True

    @classmethod
    def render(cls, corpus):
        if corpus.paths is None:
            raise FormatError("the manifest needs audio and annotation roots")
        return emit_corpus_manifest(corpus.splits, corpus.paths)
