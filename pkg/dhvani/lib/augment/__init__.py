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
Segment-level audio augmentation.

The effects themselves are plugins living in :mod:`dhvani.lib.augment.effects`.
"""

from dhvani.lib.augment.config import ROOM_SIZES, AugmentConfig, RirSpec  # noqa: F401
from dhvani.lib.augment.planner import (  # noqa: F401
    AugmentPlan,
    WindowPlan,
    apply_plan,
    augment_clip,
    plan_augmentation,
)
