#!/usr/bin/env python
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

import os.path

CONFIG_DIR = os.path.expanduser("~/.config/appellkit")
CONFIG_FILE = os.path.join(CONFIG_DIR, "appellkit.json")
MAX_LOG_SIZE = 5 * 1024 * 1024 # 5 megabytes
MAX_LOG_COUNT = 3
LOG_FORMAT = "%(asctime)s %(levelname)s - %(name)s - %(message)s"

APP_NAME = "appellkit"
VERSION = "0.1.0"

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
# A defect in appellkit itself, never a property of the inputs (sysexits EX_SOFTWARE)
EXIT_INTERNAL = 70


class AppellError(Exception):
    """
    Base class for every error raised on purpose by the library.
    """
    exitCode = EXIT_IDENTITY_FAILED


class UsageError(AppellError):
    exitCode = EXIT_USAGE


class DomainError(AppellError):
    """
    A mathematically invalid request: the inputs violate a stated restriction.
    """
    exitCode = EXIT_DOMAIN


class InvalidParameter(DomainError):
    pass


class EvalAtPole(DomainError):
    pass


class ComposeWithLaurent(DomainError):
    pass


class NonUnitConstantTerm(DomainError):
    pass


class LowerParamPole(DomainError):
    pass


class BadReduction(DomainError):
    pass
