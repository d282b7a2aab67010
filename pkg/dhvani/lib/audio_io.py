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
Loading, converting and saving audio as mono sample buffers.

Every buffer handed around by Dhvani is an :class:`AudioBuffer`: a read-only
float64 numpy array with its sample rate.
"""

import io
import logging
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import soundfile as sf
from scipy import signal

from dhvani.lib.exceptions import AudioError
from dhvani.lib.utilities import atomic_write

_log = logging.getLogger(__name__)

#: Sample rate every pipeline stage works at.
TARGET_RATE = 16000

#: Encodings accepted by :func:`load_audio`.
SUPPORTED_SUBTYPES = ("PCM_16", "PCM_24", "PCM_32", "FLOAT")


@dataclass(frozen=True)
class AudioBuffer:
    """
    A mono sample sequence with its sample rate.

    Attributes:
        samples: One-dimensional float array, nominally in [-1.0, 1.0].
        sample_rate: Samples per second.
    """

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        samples = np.array(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError("AudioBuffer holds a single channel")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.shape[0]

    @property
    def duration_seconds(self) -> float:
        """Exact duration, ``len(samples) / sample_rate``."""
        return len(self) / self.sample_rate


def load_audio(path: str, target_rate: int = TARGET_RATE) -> AudioBuffer:
    """
    Load a WAV file as a mono buffer at ``target_rate``.

    Multi-channel files are downmixed by averaging the channels, then resampled.

    Args:
        path: Path of a PCM or float WAV file.
        target_rate: Sample rate of the returned buffer.

    Raises:
        AudioError: If the file can't be read, uses an unsupported encoding or
            holds no samples.
    """
    try:
        info = sf.info(path)
    except RuntimeError as err:
        raise AudioError(path, f"unreadable file: {err}") from err
    if info.format not in ("WAV", "WAVEX") or info.subtype not in SUPPORTED_SUBTYPES:
        raise AudioError(path, f"unsupported encoding {info.format}/{info.subtype}")

    try:
        data, rate = sf.read(path, dtype="float64", always_2d=True)
    except RuntimeError as err:
        raise AudioError(path, f"unreadable file: {err}") from err
    if data.shape[0] == 0:
        raise AudioError(path, "zero-length audio")

    mono = data.mean(axis=1)
    _log.debug(
        "Loaded %s: %s channel(s), %s Hz, %s frames",
        path,
        data.shape[1],
        rate,
        data.shape[0],
    )
    return resample(AudioBuffer(mono, rate), target_rate)


def save_audio(buffer: AudioBuffer, path: str) -> None:
    """
    Save a buffer as a 16-bit PCM WAV file.

    The file is rendered in memory and moved into place atomically.

    Raises:
        AudioError: If the path can't be written.
    """
    pcm = np.clip(np.round(buffer.samples * 32768.0), -32768, 32767).astype(np.int16)
    out = io.BytesIO()
    sf.write(out, pcm, buffer.sample_rate, subtype="PCM_16", format="WAV")
    try:
        atomic_write(path, out.getvalue())
    except OSError as err:
        raise AudioError(path, f"unwritable path: {err}") from err


def resample(buffer: AudioBuffer, target_rate: int) -> AudioBuffer:
    """
    Resample with band-limited (polyphase windowed-sinc) interpolation.

    The output holds exactly ``round(len * target_rate / sample_rate)`` samples.
    """
    if target_rate <= 0:
        raise ValueError("target_rate must be positive")
    if target_rate == buffer.sample_rate:
        return buffer

    ratio = Fraction(target_rate, buffer.sample_rate)
    out = signal.resample_poly(buffer.samples, ratio.numerator, ratio.denominator)
    return AudioBuffer(
        fit_length(out, int(round(len(buffer) * target_rate / buffer.sample_rate))),
        target_rate,
    )


def fit_length(samples: np.ndarray, length: int) -> np.ndarray:
    """Trim or zero-pad ``samples`` at the end to exactly ``length`` samples."""
    if samples.shape[0] >= length:
        return samples[:length]
    return np.pad(samples, (0, length - samples.shape[0]))


def peak(samples: np.ndarray) -> float:
    """Maximum absolute amplitude, 0.0 for empty input."""
    if samples.size == 0:
        return 0.0
    return float(np.max(np.abs(samples)))


def rms(samples: np.ndarray) -> float:
    """Root mean square amplitude, 0.0 for empty input."""
    if samples.size == 0:
        return 0.0
    return float(np.sqrt(np.mean(np.square(samples))))


def scale_to_peak(samples: np.ndarray, target_peak: float) -> np.ndarray:
    """Scale a raw sample array so its peak equals ``target_peak``; silence is kept."""
    current = peak(samples)
    if current == 0.0:
        return samples
    return samples * (target_peak / current)


def peak_normalize(buffer: AudioBuffer, target_peak: float = 1.0) -> AudioBuffer:
    """
    Scale a buffer so its maximum absolute sample equals ``target_peak``.

    An all-zero buffer is returned unchanged.
    """
    if not 0.0 < target_peak <= 1.0:
        raise ValueError("target_peak must be in (0, 1]")
    if peak(buffer.samples) == 0.0:
        return buffer
    return AudioBuffer(scale_to_peak(buffer.samples, target_peak), buffer.sample_rate)


def wav_duration(path: str) -> float:
    """Duration of an audio file in seconds, read from its header."""
    if not os.path.exists(path):
        raise AudioError(path, "file does not exist")
    try:
        info = sf.info(path)
    except RuntimeError as err:
        raise AudioError(path, f"unreadable file: {err}") from err
    return info.frames / info.samplerate
