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

""" Tests for code in `bulsol.settings`. """

import pytest

from bulsol.settings import Setting, Settings, SettingType


class TestSettingType:
    @pytest.mark.parametrize("s", ["bool", "Int", "float ", "STRING", "", "123"])
    def test_from_str_raises_ValueError(self, s: str) -> None:
        with pytest.raises(ValueError):
            SettingType.from_str(s)

    def test_from_str(self) -> None:
        assert SettingType.from_str("BOOL") == SettingType.BOOL
        assert SettingType.from_str("INT") == SettingType.INT
        assert SettingType.from_str("FLOAT") == SettingType.FLOAT
        assert SettingType.from_str("STR") == SettingType.STR

    @pytest.mark.parametrize(
        "data_type, s, exp",
        [
            (SettingType.BOOL, "0", False),
            (SettingType.BOOL, " 1", True),
            (SettingType.INT, "26", 26),
            (SettingType.INT, "-3", -3),
            (SettingType.FLOAT, "1e-12", 1e-12),
            (SettingType.FLOAT, "5", 5.0),
            (SettingType.STR, " abc ", "abc"),
            # -- should raise a 'ValueError':
            (SettingType.BOOL, "true", None),
            (SettingType.INT, "1.5", None),
            (SettingType.FLOAT, "abc", None),
            # ...
        ],
    )
    def test_convert(self, data_type: SettingType, s: str, exp: object) -> None:
        if exp is None:
            with pytest.raises(ValueError):
                data_type.convert(s)
        else:
            assert data_type.convert(s) == exp

    def test_convert_raises_TypeError(self) -> None:
        with pytest.raises(TypeError):
            SettingType.INT.convert(26)  # type: ignore


class TestSetting:
    def test_init(self) -> None:
        setting = Setting("state_cap", SettingType.INT, 26)
        assert setting.name == "state_cap"
        assert setting.value == 26

    @pytest.mark.parametrize(
        "data_type, value",
        [
            (SettingType.INT, 1.5),
            (SettingType.INT, True),
            (SettingType.BOOL, 1),
            (SettingType.FLOAT, "1.0"),
            (SettingType.STR, 3),
        ],
    )
    def test_init_raises_TypeError(self, data_type: SettingType, value: object) -> None:
        with pytest.raises(TypeError):
            Setting("x", data_type, value)  # type: ignore


class TestSettings:
    @pytest.mark.parametrize(
        "name, exp",
        [
            ("state_cap", 26),
            ("dense_solve_max_states", 5000),
            ("power_tolerance", 1e-12),
            ("stationary_residual", 1e-10),
            ("snapshot_budget", 100000),
            ("window_factor", 10),
            ("min_window", 10000),
            ("regime_epsilon", 0.05),
            ("exhaustive_max_bits", 32),
        ],
    )
    def test_defaults(self, name: str, exp: object) -> None:
        assert name in Settings
        assert Settings[name] == exp

    def test_get(self) -> None:
        assert Settings.get("state_cap") == 26
        assert Settings.get("no_such_setting") is None
        assert Settings.get("no_such_setting", 7) == 7

    def test_keys(self) -> None:
        assert len(Settings) == len(Settings.keys())
        assert all(isinstance(setting, Setting) for setting in Settings.values())
        assert Settings.definition_file.endswith("settings.csv")

    def test_getitem_raises_KeyError(self) -> None:
        with pytest.raises(KeyError):
            Settings["no_such_setting"]
