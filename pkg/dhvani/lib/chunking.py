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
Fixed-length, non-overlapping chunking of long-form audio.

Training chunks drop a short or silent trailing fragment; inference chunks
zero-pad the last chunk so every chunk has the same length.
"""

import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from dhvani.lib.audio_io import AudioBuffer, rms

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChunkConfig:
    """
    Chunking settings.

    Attributes:
        chunk_seconds: Length of every chunk.
        min_tail_seconds: Training tails shorter than this are dropped.
        silence_rms_threshold: Training tails quieter than this RMS are dropped.
    """

    chunk_seconds: float = 25.0
    min_tail_seconds: float = 0.5
    silence_rms_threshold: float = 1e-4

    def __post_init__(self):
        if not self.chunk_seconds > self.min_tail_seconds > 0:
            raise ValueError("chunk_seconds > min_tail_seconds > 0 must hold")


@dataclass(frozen=True)
class ChunkRecord:
    """
    One chunk of a source recording.

    Attributes:
        index: Position of the chunk in its source.
        start_s: Offset of the first sample in the source.
        end_s: Offset just past the last source sample held by the chunk.
        samples: The chunk audio (zero-padded in inference mode).
        padded: Whether zeros were appended.
    """

    index: int
    start_s: float
    end_s: float
    samples: AudioBuffer
    padded: bool = False

    def to_dict(self, uri: str) -> dict:
        """Manifest record of the chunk."""
        return {
            "uri": uri,
            "index": self.index,
            "start_s": round(self.start_s, 3),
            "end_s": round(self.end_s, 3),
            "padded": self.padded,
        }


def _chunk_length(buffer: AudioBuffer, cfg: ChunkConfig) -> int:
    if len(buffer) == 0:
        raise ValueError("empty buffer")
    return int(round(cfg.chunk_seconds * buffer.sample_rate))


def chunk_for_training(buffer: AudioBuffer, cfg: ChunkConfig) -> List[ChunkRecord]:
    """
    Split a buffer into consecutive ``chunk_seconds`` slices for training.

    The final fragment is dropped when it is shorter than ``min_tail_seconds``
    or its RMS is below ``silence_rms_threshold``. Nothing is padded.
    """
    size = _chunk_length(buffer, cfg)
    rate = buffer.sample_rate
    chunks = []
    for index, start in enumerate(range(0, len(buffer), size)):
        piece = buffer.samples[start : start + size]
        if piece.shape[0] < size:
            tail_seconds = piece.shape[0] / rate
            if tail_seconds < cfg.min_tail_seconds:
                _log.debug("Dropping %.3f s tail: too short", tail_seconds)
                break
            if rms(piece) < cfg.silence_rms_threshold:
                _log.debug("Dropping %.3f s tail: silent", tail_seconds)
                break
        chunks.append(
            ChunkRecord(
                index=index,
                start_s=start / rate,
                end_s=(start + piece.shape[0]) / rate,
                samples=AudioBuffer(piece, rate),
            )
        )
    return chunks


def chunk_for_inference(buffer: AudioBuffer, cfg: ChunkConfig) -> List[ChunkRecord]:
    """
    Split a buffer into ``ceil(duration / chunk_seconds)`` equal-length chunks.

    The last chunk is zero-padded to full length and flagged; no audio is
    dropped.
    """
    size = _chunk_length(buffer, cfg)
    rate = buffer.sample_rate
    count = math.ceil(len(buffer) / size)
    chunks = []
    for index in range(count):
        start = index * size
        piece = buffer.samples[start : start + size]
        padded = piece.shape[0] < size
        if padded:
            piece = np.pad(piece, (0, size - piece.shape[0]))
        chunks.append(
            ChunkRecord(
                index=index,
                start_s=start / rate,
                end_s=min(start + size, len(buffer)) / rate,
                samples=AudioBuffer(piece, rate),
                padded=padded,
            )
        )
    return chunks
