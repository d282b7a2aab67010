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
Base class for Dhvani tests.
"""

import os
import unittest

import numpy as np
import pytest
import soundfile as sf


def write_wav(path, samples, rate=16000, subtype="PCM_16"):
    """Write a WAV file the way an external tool would."""
    sf.write(path, np.asarray(samples), rate, subtype=subtype, format="WAV")
    return path


class DhvaniTestCase(unittest.TestCase):
    """This is the base test case class for Dhvani tests.

    It exposes the ``tmp_path`` and ``capsys`` pytest fixtures as
    ``self.tmp_dir`` and ``self.capsys``.
    """

    @pytest.fixture(autouse=True)
    def _pytest_fixtures(self, tmp_path, capsys):
        """Use pytest fixtures as part of this class."""
        self.tmp_dir = str(tmp_path)
        self.capsys = capsys

    def path(self, *parts):
        """Path inside the temporary directory of the test."""
        return os.path.join(self.tmp_dir, *parts)

    def write(self, name, content):
        """Write a text file in the temporary directory and return its path."""
        path = self.path(name)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="utf-8") as fd:
            fd.write(content)
        return path
