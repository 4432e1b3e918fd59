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

""" Definition of the tunable settings (caps, budgets, tolerances and defaults) of the laboratory
together with their

      - name,
      - data type and
      - value.

The settings are loaded once from the CSV file :file:`settings.csv` of this package; a user specific
file :file:`~/.bulsol/settings.csv` takes precedence if it exists.
"""

from __future__ import annotations

import csv
import enum
from os import path
from typing import Any, Dict, ItemsView, KeysView, Optional, Tuple, Union, ValuesView

from .utils import Singleton

# ------------------------------------------------------------------------------------------------------------------- #
# Constants and type aliases
# ------------------------------------------------------------------------------------------------------------------- #

CSV_FILE = "settings.csv"  # CSV file with the setting definitions
USER_DIR = "~/.bulsol"  # directory of the optional user specific setting definitions

SettingValueType = Union[bool, int, float, str]  # a setting value can be of type 'bool', 'int', 'float' or 'str'


# ------------------------------------------------------------------------------------------------------------------- #
# Helper classes
# ------------------------------------------------------------------------------------------------------------------- #


@enum.unique
class SettingType(enum.Enum):
    """Supported data types of a setting:

    * ``BOOL``   The value of the setting is given as **boolean** (``0`` or ``1``).
    * ``INT``    The value of the setting is given as **integer**.
    * ``FLOAT``  The value of the setting is given as **floating point number**.
    * ``STR``    The value of the setting is given as **string**.
    """

    BOOL = 1
    INT = 2
    FLOAT = 3
    STR = 4

    @staticmethod
    def from_str(s: str) -> SettingType:
        """Create a corresponding enum representation for the passed string.

        :param s: The passed string.
        :type s: str
        :returns: The corresponding enum representation of the passed string.
        :rtype: ``SettingType``
        :raises ValueError:
            Will be raised if the passed string does not have a corresponding enum representation.
        """
        try:
            return SettingType[s]
        except KeyError:
            raise ValueError("no corresponding enum representation ({!r})".format(s)) from None

    def convert(self, value: str) -> SettingValueType:
        """Convert the passed value (in form of a string) to this data type.

        :param value: The passed value (in form of a string).
        :type value: str
        :returns: The converted value.
        :rtype: ``bool``, ``int``, ``float`` or ``str``
        :raises TypeError:
            Will be raised if the passed value is not a string.
        :raises ValueError:
            Will be raised if the passed value could not be converted to this data type.

        >>> SettingType.INT.convert(" 26")
        26
        >>> SettingType.FLOAT.convert("1e-12")
        1e-12
        >>> SettingType.BOOL.convert("1")
        True
        """
        if not isinstance(value, str):
            raise TypeError("value has incompatible type {!s}; expected 'str'".format(type(value)))
        value = value.strip()
        if self is SettingType.BOOL:
            if value == "0":
                return False
            elif value == "1":
                return True
            raise ValueError("invalid representation for data type BOOL ({!r})".format(value))
        elif self is SettingType.INT:
            return int(value)
        elif self is SettingType.FLOAT:
            return float(value)
        return value


class Setting:
    """Representation of a specific setting.

    :param name: The name of the setting.
    :type name: str
    :param data_type: The data type, see :class:`SettingType`.
    :type data_type: SettingType
    :param value: The value of the setting.
    :type value: bool, int, float or str
    :raises TypeError:
        Will be raised if the passed value does not match the data type.
    """

    def __init__(self, name: str, data_type: SettingType, value: SettingValueType) -> None:
        self.name = name
        self.data_type = data_type
        self.check_value_type(value)
        self.value = value

    def __repr__(self) -> str:
        return "Setting({},{},{!r})".format(self.name, self.data_type, self.value)

    def check_value_type(self, value: SettingValueType) -> None:
        """Check the type of the passed value against the data type of the setting.

        :raises TypeError:
            Will be raised if the passed value has an invalid type.
        """
        expected: Dict[SettingType, Tuple[type, ...]] = {
            SettingType.BOOL: (bool,),
            SettingType.INT: (int,),
            SettingType.FLOAT: (int, float),
            SettingType.STR: (str,),
        }
        if type(value) not in expected[self.data_type]:
            raise TypeError(
                "value of setting {!r} has invalid type {!s}; expected {}".format(
                    self.name, type(value), self.data_type.name
                )
            )


# ------------------------------------------------------------------------------------------------------------------- #
# Settings dictionary class
# ------------------------------------------------------------------------------------------------------------------- #


def _load_settings_from_csv() -> Tuple[Dict[str, Setting], str]:
    """Helper function to load all setting definitions from the CSV file.

    :returns: A tuple with a dictionary of the settings and a string with the path of the used CSV file.
    :rtype: ``tuple`` ( dict, str )
    """
    # search for a user defined settings CSV file in "~/.bulsol"
    filename = path.expanduser(path.join(USER_DIR, CSV_FILE))
    if not path.exists(filename):
        # ... and switch back to the default one if no one was found
        filename = path.join(path.dirname(path.abspath(__file__)), CSV_FILE)
    settings = {}
    with open(filename, "r", encoding="utf-8") as file:
        reader = csv.reader(file, delimiter=",", skipinitialspace=True)
        for row in reader:
            # continue for empty rows or comments (starts with character '#')
            if not row or row[0].startswith("#"):
                continue
            name, data_type_str, value_str = row
            data_type = SettingType.from_str(data_type_str.strip())
            settings[name.strip()] = Setting(name.strip(), data_type, data_type.convert(value_str))
    return settings, filename


class SettingsMeta(type):  # pragma: no cover
    def __init__(cls, *args: Any, **kwargs: Any) -> None:
        # Load the setting definitions
        cls._settings, cls._csv_file = _load_settings_from_csv()

    def __contains__(cls, item: str) -> bool:
        return item in cls._settings

    def __getitem__(cls, key: str) -> Any:
        return cls._settings[key].value

    def __len__(cls) -> int:
        return len(cls._settings)

    @property
    def definition_file(cls) -> str:
        """Returns the path of the used settings definition file."""
        return cls._csv_file


class Settings(Singleton, metaclass=SettingsMeta):
    """Dictionary of the tunable settings of the laboratory.

    .. note::

        The settings are loaded from the CSV file :file:`settings.csv` in this package, but the user
        can create a user specific CSV file under :file:`~/.bulsol/settings.csv`.

    Example::

        cap = Settings["state_cap"]  # maximal n for the exact solver
    """

    @classmethod
    def keys(cls) -> KeysView[str]:
        return cls._settings.keys()

    @classmethod
    def items(cls) -> ItemsView[str, Setting]:
        return cls._settings.items()

    @classmethod
    def values(cls) -> ValuesView[Setting]:
        return cls._settings.values()

    @classmethod
    def get(cls, key: str, default: Optional[SettingValueType] = None) -> Optional[SettingValueType]:
        assert isinstance(key, str), "'key' must be of type str"
        setting = cls._settings.get(key)
        return default if setting is None else setting.value

    @classmethod
    def dump(cls) -> None:
        for name, setting in cls._settings.items():
            print("{!r}: data_type = {!s}, value = {!r}".format(name, setting.data_type, setting.value))


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = ["SettingType", "SettingValueType", "Setting", "Settings"]
