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
Exceptions used by Dhvani.
"""


class DhvaniException(Exception):
    """Generic class covering all the exceptions generated by dhvani."""

    pass


class DhvaniPluginException(DhvaniException):
    """Generic exception class that can be used by the plugins to indicate
    an error.
    """

    pass


class AudioError(DhvaniException):
    """
    Raised when audio can't be read, decoded or written.

    Args:
        path (str): The file the operation was working on.
        reason (str): What went wrong.
    """

    def __init__(self, path, reason):
        self.path = path
        self.reason = reason

    def __str__(self):
        return f'Audio error on "{self.path}": {self.reason}'


class ConfigurationError(DhvaniException):
    """
    Raised when a configuration value is missing or violates its invariant.

    Args:
        key (str): Name of the offending configuration key.
        reason (str): Why the value was rejected.
    """

    def __init__(self, key, reason):
        self.key = key
        self.reason = reason

    def __str__(self):
        return f'Invalid configuration "{self.key}": {self.reason}'


class AnnotationError(DhvaniException):
    """
    Raised when a CSV annotation row can't be parsed or is inconsistent.

    Attributes:
        row (int): 1-based row number in the file.
        column (int): 1-based column number, ``None`` when the whole row is bad.
        reason (str): Description of the problem.
    """

    def __init__(self, row, column, reason):
        self.row = row
        self.column = column
        self.reason = reason

    def __str__(self):
        if self.column is None:
            return f"Row {self.row}: {self.reason}"
        return f"Row {self.row}, column {self.column}: {self.reason}"


class RttmParseError(DhvaniException):
    """
    Raised when a RTTM line is malformed.

    Attributes:
        line_number (int): 1-based line number.
        field (str): Name of the field that failed to parse.
        reason (str): Description of the problem.
    """

    def __init__(self, line_number, field, reason):
        self.line_number = line_number
        self.field = field
        self.reason = reason

    def __str__(self):
        return f'Line {self.line_number}: bad "{self.field}" field: {self.reason}'


class FormatError(DhvaniException):
    """Raised when data can't be rendered in the requested annotation format."""

    def __init__(self, reason):
        self.reason = reason

    def __str__(self):
        return self.reason


class MetricError(DhvaniException):
    """Raised when a metric is undefined for the given input."""

    def __init__(self, reason):
        self.reason = reason

    def __str__(self):
        return self.reason


class OracleError(DhvaniException):
    """Raised when a brute-force oracle is asked for more than it can enumerate."""

    def __init__(self, reason):
        self.reason = reason

    def __str__(self):
        return self.reason
