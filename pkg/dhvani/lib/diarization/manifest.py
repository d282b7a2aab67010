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
The YAML corpus manifest describing a speaker diarization protocol.

The layout follows the usual database file of diarization toolkits::

    Databases:
      <database>: <audio_root>/{uri}.wav
    Protocols:
      <database>:
        SpeakerDiarization:
          <protocol>:
            train:
              uri: <annotation_root>/train.lst
              annotation: <annotation_root>/train.rttm
              annotated: <annotation_root>/train.uem
              files: [...]
            development: ...
            test: ...
"""

import logging
import os
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence

from omegaconf import OmegaConf

from dhvani.lib.exceptions import FormatError

_log = logging.getLogger(__name__)

#: Splits every manifest must describe, in output order.
SPLITS = ("train", "development", "test")


@dataclass(frozen=True)
class ManifestPaths:
    """
    Where the protocol files live.

    Attributes:
        audio_root: Directory holding ``<uri>.wav`` files.
        annotation_root: Directory holding the per-split RTTM, UEM and LST files.
        database: Database name in the manifest.
        protocol: Protocol name in the manifest.
    """

    audio_root: str
    annotation_root: str
    database: str = "Dhvani"
    protocol: str = "Bangla"

    def split_file(self, split: str, extension: str) -> str:
        """Path of the ``extension`` file of a split."""
        return os.path.join(self.annotation_root, f"{split}.{extension}")


def emit_corpus_manifest(
    splits: Mapping[str, Sequence[str]], paths: ManifestPaths
) -> str:
    """
    Render the YAML manifest of a corpus.

    Args:
        splits: The recording identifiers of every split; ``train``,
            ``development`` and ``test`` must all be present (possibly empty).
        paths: Where the audio and protocol files live.

    Raises:
        FormatError: If a split is missing.
    """
    missing = [split for split in SPLITS if split not in splits]
    if missing:
        raise FormatError(f"missing split(s): {', '.join(missing)}")

    subsets = {}
    for split in SPLITS:
        subsets[split] = {
            "uri": paths.split_file(split, "lst"),
            "annotation": paths.split_file(split, "rttm"),
            "annotated": paths.split_file(split, "uem"),
            "files": list(splits[split]),
        }
    manifest = OmegaConf.create(
        {
            "Databases": {
                paths.database: os.path.join(paths.audio_root, "{uri}.wav"),
            },
            "Protocols": {
                paths.database: {"SpeakerDiarization": {paths.protocol: subsets}},
            },
        }
    )
    _log.debug(
        "Manifest splits: %s",
        ", ".join(f"{s}={len(splits[s])}" for s in SPLITS),
    )
    return OmegaConf.to_yaml(manifest)


def split_corpus(
    uris: Sequence[str], dev_files: int = 2, test: Sequence[str] = ()
) -> Dict[str, List[str]]:
    """
    Split annotated recordings: the last ``dev_files`` go to development, the
    others to train. ``test`` lists unannotated recordings.
    """
    if dev_files < 0:
        raise FormatError("the number of development files can't be negative")
    uris = list(uris)
    if dev_files >= len(uris) and uris:
        _log.warning("All %s annotated files reserved for development", len(uris))
    cut = max(0, len(uris) - dev_files)
    return {"train": uris[:cut], "development": uris[cut:], "test": list(test)}
