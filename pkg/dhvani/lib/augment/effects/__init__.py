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
"""The Dhvani augmentation effects API."""

import logging
from typing import Any, Dict

import numpy as np

from dhvani.lib.augment.config import AugmentConfig

_log = logging.getLogger(__name__)

#: Upper bound (exclusive) of the per-effect seeds stored in a plan.
SEED_BOUND = 2**63


class BaseEffect(object):
    """
    The base class that all the augmentation effects should extend.

    An effect is used in two steps. :meth:`draw` samples its parameters while
    the augmentation plan is built, so the plan fully describes the output and
    can be dumped as JSON. :meth:`apply` later renders the effect on a window
    with those parameters.

    Attributes:
        name (str): The effect name, used as key in the plan.
        order (int): Position of the effect in the processing chain; lower
            values run first.
        probability (str): Name of the :class:`AugmentConfig` field holding
            the probability the effect is selected for a window.
    """

    name: str
    order: int
    probability: str

    @classmethod
    def selected(cls, rng: np.random.Generator, cfg: AugmentConfig) -> bool:
        """Decide whether the effect is applied to the next window."""
        return bool(rng.random() < getattr(cfg, cls.probability))

    @classmethod
    def draw(cls, rng: np.random.Generator, cfg: AugmentConfig) -> Dict[str, Any]:
        """
        Sample the effect parameters for one window.

        Args:
            rng: The plan random generator.
            cfg: The augmentation settings.

        Returns:
            JSON-serializable parameters understood by :meth:`apply`.
        """
        raise NotImplementedError()

    @classmethod
    def apply(cls, seg: np.ndarray, params: Dict[str, Any], fs: int) -> np.ndarray:
        """
        Render the effect on a window.

        Args:
            seg: The window samples; never modified in place.
            params: Parameters returned by :meth:`draw`.
            fs: Sample rate.

        Returns:
            The processed samples, same length as ``seg``.
        """
        raise NotImplementedError()
