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

""" Command line tool to scan the regime map: one chain per parameter point, compared with :math:`e^{-x}` and the
    triangle. The rows are reported only, no fit is asserted.

    Example:

    .. code-block:: shell

       $ cat regimes.json
       [[10000, 0.05, "1/1"], {"n": 10000, "p": 0.5, "q": "1/100"}]
       $ bsregimes regimes.json --moves 20000 --samples 10 -o regimes.csv
"""

import argparse
import logging
import sys
import textwrap
from typing import Final, List, Optional

from ..export import read_json, write_csv
from ..montecarlo import RegimeSpec, regime_scan
from ..shapes import ScalingMode
from ..utils import Timer
from .common import EXIT_OK, add_common_arguments, run, setup_logging

_LOGGER: Final = logging.getLogger(__name__)


def regimes(args: argparse.Namespace) -> int:
    spec = RegimeSpec.from_json(read_json(args.spec))
    scaling = ScalingMode.from_str(args.scaling)
    _LOGGER.info("scanning %d parameter points", len(spec))
    with Timer() as timer:
        rows = regime_scan(spec, args.seed, args.moves, args.samples, scaling)
    exec_time = timer.elapsed

    write_csv(args.output or sys.stdout, "regimes", [row.as_tuple() for row in rows])
    if args.time:
        print("execution time: {:.2f} sec".format(exec_time), file=sys.stderr)
    return EXIT_OK


# Main program
def main(argv: Optional[List[str]] = None) -> None:
    parser = argparse.ArgumentParser(
        prog="bsregimes",
        description=textwrap.dedent(
            """\
            Command line tool to scan the regime map of the p-random q-proportion Bulgarian solitaire.

            The parameter points are read from a JSON list of [n, p, "num/den"] triples or
            {"n": ..., "p": ..., "q": ...} objects.

            Example:

              $ bsregimes regimes.json --moves 20000 --samples 10 -o regimes.csv
            """
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument("spec", type=str, help="the JSON file with the parameter points")
    parser.add_argument("--moves", type=int, help="moves before sampling, default: schedule burn-in D")
    parser.add_argument("--samples", default=10, type=int, help="sampled states per point, default: %(default)s")
    parser.add_argument(
        "--scaling",
        default="by-first-part",
        choices=["by-first-part", "theoretical", "square-root"],
        help=(
            "the scaling of the rescaled boundaries; the sup deviation is always taken on [0, inf), "
            "default: %(default)s (a = n / largest pile)"
        ),
    )
    parser.add_argument("-o", "--output", type=str, help="write the table to this file, default: stdout")
    add_common_arguments(parser)

    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    if args.samples < 1:
        parser.error("--samples must be positive")
    if args.moves is not None and args.moves < 0:
        parser.error("--moves must be non-negative")
    run(regimes, args)


if __name__ == "__main__":
    main(sys.argv[1:])
