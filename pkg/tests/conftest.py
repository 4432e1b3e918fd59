#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#  bulsol - Laboratory for p-random q-proportion Bulgarian solitaire
#  Copyright (C) 2026  The bulsol developers

#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <http://www.gnu.org/licenses/>.

import logging
from typing import Any

import pytest


def pytest_addoption(parser: Any) -> None:
    parser.addoption("--slow", action="store_true", dest="run_slow", default=False)
    parser.addoption("--loglevel", action="store", default=logging.WARNING)


def pytest_configure(config: Any) -> None:
    if not config.option.run_slow:
        setattr(config.option, "markexpr", "not slow")

    loglevel = int(config.getoption("--loglevel"))
    logging.basicConfig(level=loglevel)

    print("slow: {}".format("NO" if not config.option.run_slow else "YES"))
    print("loglevel: {:d}".format(loglevel))


@pytest.fixture
def threads_env(monkeypatch: Any) -> Any:
    monkeypatch.delenv("BULSOL_THREADS", raising=False)
    return monkeypatch
