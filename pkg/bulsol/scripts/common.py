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

""" Command line plumbing shared by the ``bs*`` scripts: common arguments, logging and the exit-code contract. """

import argparse
import logging
import sys
from typing import Callable, Final, List, Sequence, Tuple

import numpy as np

from ..settings import Settings
from ..utils import CapacityError, InvariantViolation

_LOGGER: Final = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_ERROR: Final = 1
EXIT_USAGE: Final = 2
EXIT_CAPACITY: Final = 3
EXIT_INVARIANT: Final = 4

LOG_FORMAT: Final = "%(asctime)s %(levelname)s [%(name)s|%(funcName)s]: %(message)s"


def add_common_arguments(parser: argparse.ArgumentParser, seed: bool = True) -> None:
    """Add the ``--seed``, ``-t/--time`` and ``-v/--verbose`` options."""
    if seed:
        parser.add_argument(
            "--seed",
            default=Settings["default_seed"],
            type=int,
            help="the master seed, default: %(default)s",
        )

    parser.add_argument("-t", "--time", action="store_true", help="measure the execution time")

    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="increase output verbosity by activating logging",
    )


def setup_logging(verbose: bool) -> None:
    # activate logging with level DEBUG in verbose mode
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format=LOG_FORMAT)
    else:
        logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT)


def parse_grid(values: Sequence[float]) -> np.ndarray:
    """Return the grid ``start, start + step, ...`` up to ``stop`` (inclusive within rounding).

    :raises ValueError:
        Will be raised for a non-positive step or ``start > stop``.
    """
    start, stop, step = values
    if not step > 0:
        raise ValueError("grid step must be positive ({!r})".format(step))
    if start < 0 or start > stop:
        raise ValueError("invalid grid [{!r}, {!r}]".format(start, stop))
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def parse_interval(values: Sequence[float]) -> Tuple[float, float]:
    lo, hi = values
    if lo < 0 or lo > hi:
        raise ValueError("invalid interval [{!r}, {!r}]".format(lo, hi))
    return float(lo), float(hi)


def exit_code(ex: BaseException) -> int:
    """Map an exception to the exit-code contract (2 usage, 3 capacity, 4 invariant violation, 1 otherwise)."""
    if isinstance(ex, CapacityError):
        return EXIT_CAPACITY
    if isinstance(ex, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(ex, (ValueError, OSError)):
        return EXIT_USAGE
    return EXIT_ERROR


def run(command: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> None:
    """Run a command and exit with its code; exceptions are logged and mapped by :func:`exit_code`."""
    try:
        code = command(args)
    except Exception as ex:
        code = exit_code(ex)
        if code == EXIT_ERROR:
            _LOGGER.exception(ex)
        else:
            _LOGGER.error("%s", ex)
            print("error: {!s}".format(ex), file=sys.stderr)
    sys.exit(code)


def format_list(values: List[float]) -> str:
    return ", ".join("{:.6g}".format(v) for v in values)
