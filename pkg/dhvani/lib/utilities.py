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
"""A collection of utilities for the Dhvani library."""

import hashlib
import json
import logging
import os
import tempfile
from typing import Any, Dict, Iterable, Iterator, List, Union

import numpy as np

_log = logging.getLogger(__name__)


def atomic_write(path: str, data: Union[str, bytes]) -> None:
    """
    Write a file atomically.

    The data is written to a temporary file in the target directory which is
    then renamed over ``path``, so readers never see a partial file.

    Args:
        path: Destination path.
        data: Text (written as UTF-8) or bytes.
    """
    directory = os.path.dirname(os.path.abspath(path))
    if isinstance(data, str):
        data = data.encode("utf-8")
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "wb") as tmp:
            tmp.write(data)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    _log.debug("Wrote %s", path)


def uri_from_path(path: str) -> str:
    """Return the recording identifier of a file: its name without extension."""
    return os.path.splitext(os.path.basename(path))[0]


def derive_seed(global_seed: int, uri: str) -> int:
    """
    Derive a per-file 64-bit seed from the global seed and a file URI.

    The value only depends on its inputs, never on the order in which files are
    processed.

    Args:
        global_seed: The run-wide seed.
        uri: The recording identifier.

    Returns:
        An unsigned 64-bit integer.
    """
    digest = hashlib.blake2b(uri.encode("utf-8"), digest_size=8).digest()
    uri_hash = int.from_bytes(digest, "little")
    state = np.random.SeedSequence([global_seed, uri_hash]).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])


def read_jsonl(path: str) -> List[Dict[str, Any]]:
    """Read a JSON Lines file, skipping blank lines."""
    with open(path, encoding="utf-8") as fd:
        return [json.loads(line) for line in fd if line.strip()]


def to_jsonl(records: Iterable[Dict[str, Any]]) -> str:
    """Render records as JSON Lines text with a trailing newline."""
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)


def read_texts(path: str) -> Iterator[Dict[str, Any]]:
    """
    Iterate over transcripts stored in a text or JSON Lines file.

    ``.jsonl`` files yield their records (which must carry a ``text`` key);
    any other file yields one ``{"text": line}`` record per line.
    """
    if path.endswith(".jsonl"):
        yield from read_jsonl(path)
        return
    with open(path, encoding="utf-8") as fd:
        for line in fd:
            yield {"text": line.rstrip("\n")}


def assign_splits(count: int, val_fraction: float, seed: int) -> List[str]:
    """
    Assign ``count`` items to ``train`` or ``validation``.

    Every item independently goes to validation with probability
    ``val_fraction``; the assignment only depends on ``seed``.
    """
    if not 0.0 <= val_fraction < 1.0:
        raise ValueError("val_fraction must be in [0, 1)")
    draws = np.random.default_rng(seed).random(count)
    return ["validation" if draw < val_fraction else "train" for draw in draws]
