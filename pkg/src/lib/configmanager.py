# -*- coding: utf-8 -*-

# Copyright (C) 2026 The appellkit developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import os.path, json, logging
from dataclasses import dataclass

from . import common
from .common import UsageError

_logger = logging.getLogger("config-manager")

OUTPUT_FORMAT = "outputFormat"
LOG_FILE = "logFile"
VERBOSE = "verbose"
MAX_INDEX = "maxIndex"
GRID_START = "gridStart"


def get_config_manager(path=None):
    """
    Load settings from an explicit path, or from the default file if it exists.

    A broken default file is ignored with a warning; a broken explicit file is
    a usage error.
    """
    configManager = ConfigManager()
    if path is not None:
        try:
            configManager.load_global_config(path)
        except (IOError, OSError, ValueError) as e:
            _logger.error("Error while loading configuration from %s", path)
            raise UsageError("Cannot read config file '%s': %s" % (path, e))
    elif os.path.exists(common.CONFIG_FILE):
        try:
            configManager.load_global_config(common.CONFIG_FILE)
        except (IOError, OSError, ValueError):
            _logger.exception("Error while loading configuration. Defaults will be used.")
            configManager.reset()

    _logger.debug("Global settings: %r", configManager.settings)
    return configManager


def apply_settings(settings, data):
    """
    Overlay known keys from data onto settings, so new settings can be added
    without invalidating older files.
    """
    for key, value in data.items():
        if key in settings:
            settings[key] = value
        else:
            _logger.warning("Ignoring unknown setting '%s'", key)


class ConfigManager:
    """
    Global settings for a run. Defaults live in the class-level SETTINGS dict;
    each instance works on its own copy.
    """

    SETTINGS = {
                OUTPUT_FORMAT : None,
                LOG_FILE : None,
                VERBOSE : False,
                MAX_INDEX : 400,
                GRID_START : 1
                }

    def __init__(self):
        self.reset()

    def reset(self):
        self.settings = dict(ConfigManager.SETTINGS)

    def load_global_config(self, path):
        _logger.info("Loading config from file: %s", path)
        with open(path, "r") as pFile:
            data = json.load(pFile)
        if not isinstance(data, dict) or not isinstance(data.get("settings", {}), dict):
            raise ValueError("expected an object with a 'settings' object")
        apply_settings(self.settings, data.get("settings", {}))
        _logger.info("Successfully loaded configuration")

    def __getitem__(self, key):
        return self.settings[key]


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one CLI invocation needs, after options and settings are merged.
    """
    command: str
    target: str = None
    upper: tuple = ()
    lower: tuple = ()
    k: int = None
    m: object = None
    n: int = None
    nMin: int = None
    nMax: int = None
    k2: int = None
    M: object = None
    x0: object = None
    h: object = None
    order: int = None
    direction: str = None
    f: tuple = ()
    inPath: str = None
    outputFormat: str = None
    outPath: str = None
