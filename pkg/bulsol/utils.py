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

""" Some useful helper classes and methods. """

from __future__ import annotations

import logging
import os
import timeit
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, ClassVar, Final, Iterable, List, Optional, TypeVar

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants and type aliases
# ------------------------------------------------------------------------------------------------------------------- #

THREADS_ENV_VAR: Final = "BULSOL_THREADS"  # caps the number of worker threads for multi-seed runs

T = TypeVar("T")
R = TypeVar("R")


# ------------------------------------------------------------------------------------------------------------------- #
# Exception classes
# ------------------------------------------------------------------------------------------------------------------- #


class CapacityError(RuntimeError):
    """Exception which is raised if a configured cap or work budget would be exceeded.

    :param message: A detailed message naming the exceeded cap.
    :type message: str
    :param cap: The value of the exceeded cap.
    :type cap: int
    """

    def __init__(self, message: str, cap: int) -> None:
        super().__init__(message)
        self.cap = cap


class InvariantViolation(AssertionError):
    """Exception which is raised if a checked invariant (e.g. card conservation) does not hold.

    :param message: A detailed message describing the violated invariant.
    :type message: str
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


# ------------------------------------------------------------------------------------------------------------------- #
# Helper classes
# ------------------------------------------------------------------------------------------------------------------- #


class Singleton:
    """Singleton base class.

    Example:

    >>> class MySingleton(Singleton):
    ...     def __init__(self, v):
    ...         self._val = v
    ...     def __str__(self):
    ...         return str(self._val)

    >>> s1 = MySingleton(1)
    >>> s2 = MySingleton(2)
    >>> s1 is s2
    True
    """

    _inst: ClassVar[Singleton]

    def __new__(cls, *args: Any, **kwargs: Any) -> Singleton:
        """Create a new instance."""
        if "_inst" not in vars(cls):
            cls._inst = object.__new__(cls)
        return cls._inst


class Timer:
    """Context manager for execution time measurement.

    Example:

    >>> with Timer() as timer:
    ...     s = sum(range(1000))
    ...
    >>> timer.elapsed >= 0
    True
    """

    def __enter__(self) -> Timer:
        self._start = timeit.default_timer()
        return self

    def __exit__(self, *args: Any) -> None:
        self._end = timeit.default_timer()
        self._elapsed = self._end - self._start

    @property
    def elapsed(self) -> float:
        """Return the elapsed time (in seconds).

        :returns: The elapsed time in seconds.
        :rtype: ``float``
        """
        return self._elapsed


# ------------------------------------------------------------------------------------------------------------------- #
# Helper functions
# ------------------------------------------------------------------------------------------------------------------- #


def ceil_div(a: int, b: int) -> int:
    """Return ``ceil(a / b)`` for integers (``b > 0``) without any floating point rounding.

    >>> ceil_div(18, 10)
    2
    >>> ceil_div(10, 10)
    1
    >>> ceil_div(0, 7)
    0
    """
    assert b > 0, "'b' must be positive"
    return -(-a // b)


def thread_count(default: Optional[int] = None) -> int:
    """Return the number of worker threads to use for independent runs.

    The value of the environment variable ``BULSOL_THREADS`` caps the number of threads; if it is not
    set (or invalid) the passed default or the number of CPUs is used.

    :param default: The default number of threads (default :const:`None`, which means ``os.cpu_count()``).
    :type default: int or None
    :returns: The number of worker threads (at least 1).
    :rtype: ``int``
    """
    count = default if default is not None else (os.cpu_count() or 1)
    env = os.environ.get(THREADS_ENV_VAR)
    if env is not None:
        try:
            cap = int(env)
            if cap < 1:
                raise ValueError("must be positive")
        except ValueError as ex:
            _LOGGER.warning("ignoring invalid value of %s (%r): %s", THREADS_ENV_VAR, env, ex)
        else:
            count = min(count, cap)
    return max(1, count)


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Apply ``func`` to all items, using a pool of worker threads, and return the results in input order.

    :param func: The function to apply; it must not share mutable state between calls.
    :param items: The items to process.
    :param threads: The maximal number of worker threads (default :const:`None`, see :func:`thread_count`).
    :type threads: int or None
    :returns: The list of results, ordered like the passed items.
    :rtype: ``list``

    >>> parallel_map(lambda x: x * x, [1, 2, 3], threads=2)
    [1, 4, 9]
    """
    items = list(items)
    workers = min(thread_count(threads), max(1, len(items)))
    if workers == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "THREADS_ENV_VAR",
    "CapacityError",
    "InvariantViolation",
    "Singleton",
    "Timer",
    "ceil_div",
    "thread_count",
    "parallel_map",
]
