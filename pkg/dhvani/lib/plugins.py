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
"""Module handling the load/call of the plugins of dhvani."""

import logging

from straight.plugin import load

from dhvani.lib.augment.effects import BaseEffect
from dhvani.lib.diarization.formats import BaseFormat

_log = logging.getLogger(__name__)


class _PluginManager(object):
    """Manage a particular set of Dhvani plugins"""

    def __init__(self, namespace, base_class):
        self._namespace = namespace
        self._base_class = base_class

    def get_plugins(self):
        """Return the list of plugins."""
        return load(self._namespace, subclasses=self._base_class)

    def get_plugin_names(self):
        """Return the list of plugin names."""
        return [plugin.name for plugin in self.get_plugins()]

    def get_plugin(self, plugin_name):
        """Return the plugin corresponding to the given plugin name, or ``None``."""
        for plugin in self.get_plugins():
            if plugin.name.lower() == plugin_name.lower():
                return plugin
        return None


class _EffectManager(_PluginManager):
    """The augmentation effects, in processing order."""

    def get_plugins(self):
        """Return the effects sorted by their position in the chain."""
        return sorted(super().get_plugins(), key=lambda effect: effect.order)


EFFECT_PLUGINS = _EffectManager("dhvani.lib.augment.effects", BaseEffect)
FORMAT_PLUGINS = _PluginManager("dhvani.lib.diarization.formats", BaseFormat)
