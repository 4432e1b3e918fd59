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

""" Command line tool to simulate the p-random q-proportion Bulgarian solitaire and compare the rescaled diagram
    boundary with a limit shape.

    Example:

    .. code-block:: shell

       $ bssimulate --n 100000 --p 0.01 --q 1/1 --moves 200 --start triangular --shape exp \\
             --scaling theoretical --svg decay.svg
       final state: 1043+1029+1018+...
       sup deviation on [0,3]: 0.0781
"""

import argparse
import logging
import sys
import textwrap
from typing import Final, List, Optional

from ..export import write_csv, write_json, write_svg
from ..montecarlo import chain_replicas, make_schedule
from ..partitions import Configuration, WeakComposition
from ..shapes import LimitShape, ScalingMode
from ..solitaire import SolitaireParams, triangular_start
from ..utils import Timer
from .common import EXIT_OK, add_common_arguments, parse_grid, parse_interval, run, setup_logging

_LOGGER: Final = logging.getLogger(__name__)


def initial_state(start: str, n: int) -> Configuration:
    """Return the initial configuration: ``triangular``, ``single`` (one pile), ``ones`` (n piles of one card) or
    an explicit composition like ``'5+3+2'``.

    :raises ValueError:
        Will be raised for an unknown start or a composition of the wrong size.
    """
    if start == "triangular":
        return triangular_start(n)
    if start == "single":
        return WeakComposition([n])
    if start == "ones":
        return WeakComposition([1] * n)
    alpha = WeakComposition.from_str(start)
    if alpha.n != n:
        raise ValueError("initial state {!r} holds {:d} cards, expected {:d}".format(start, alpha.n, n))
    return alpha


def simulate(args: argparse.Namespace) -> int:
    params = SolitaireParams(args.n, args.p, args.q)
    grid = parse_grid(args.grid)
    interval = parse_interval(args.interval)
    shape = LimitShape.from_str(args.shape)
    scaling = ScalingMode.from_str(args.scaling)
    alpha0 = initial_state(args.start, params.n)
    schedule = make_schedule(params)
    burn_in, window = args.burn_in, args.window
    if args.moves is not None:
        burn_in, window = 0, args.moves
    seeds = [args.seed + j for j in range(args.replicas)]

    with Timer() as timer:
        replicas = chain_replicas(
            alpha0,
            params,
            seeds,
            schedule=schedule,
            window=window,
            stride=args.stride,
            stream=args.stream,
            shape=shape,
            scaling=scaling,
            scaling_value=args.scaling_value,
            interval=interval,
            epsilon=args.epsilon,
            grid=grid,
            burn_in=burn_in,
        )
    exec_time = timer.elapsed
    stats = replicas[0]
    assert stats.final_report is not None

    print("final state: {!s}".format(stats.final.ord()))
    for seed, replica in zip(seeds, replicas):
        assert replica.final_report is not None
        print(
            "seed {:d}: sup deviation on [{:g},{:g}]: {:.4f}".format(
                seed, interval[0], interval[1], replica.final_report.sup_on_interval
            )
        )

    if args.boundary:
        write_csv(args.boundary, "boundary", stats.boundary_rows())
    if args.traces:
        write_csv(args.traces, "traces", stats.trace_rows())
    if args.stats:
        document = stats.to_json()
        document["seeds"] = seeds
        document["replicas"] = [
            {"seed": seed, "sup": replica.final_report.sup_on_interval if replica.final_report else None}
            for seed, replica in zip(seeds, replicas)
        ]
        document["traces_path"] = args.traces
        write_json(args.stats, document)
    if args.svg:
        lam = stats.final.ord()
        write_svg(
            args.svg,
            lam,
            stats.scaling_for(lam),
            shape,
            x_max=max(float(grid[-1]), 1.0),
            title="n={:d}, p={:g}, q={}, {:d} moves".format(
                params.n, params.p, params.q, stats.burn_in + stats.window
            ),
        )

    # print execution time only if desired
    if args.time:
        print("execution time: {:.2f} sec".format(exec_time))
    return EXIT_OK


# Main program
def main(argv: Optional[List[str]] = None) -> None:
    parser = argparse.ArgumentParser(
        prog="bssimulate",
        description=textwrap.dedent(
            """\
            Command line tool to simulate the p-random q-proportion Bulgarian solitaire
            and to compare the rescaled diagram boundary with a limit shape.

            Example:

              $ bssimulate --n 100000 --p 0.01 --q 1/1 --moves 200 --svg decay.svg
              final state: 1043+1029+1018+...
              seed 20190101: sup deviation on [0,3]: 0.0781
            """
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument("--n", default=100000, type=int, help="number of cards, default: %(default)s")
    parser.add_argument("--p", default=0.01, type=float, help="pick probability, default: %(default)s")
    parser.add_argument("--q", default="1/1", type=str, help="candidate proportion 'num/den', default: %(default)s")
    parser.add_argument(
        "--moves",
        type=int,
        help="total number of moves without burn-in (overrides --burn-in and --window)",
    )
    parser.add_argument("--burn-in", type=int, help="number of burn-in moves, default: schedule value D")
    parser.add_argument("--window", type=int, help="number of recorded moves, default: practical window")
    parser.add_argument("--stride", type=int, help="record every STRIDE-th move, default: automatic")
    parser.add_argument(
        "--start",
        default="triangular",
        type=str,
        help="initial state: 'triangular', 'single', 'ones' or a composition like '5+3+2', default: %(default)s",
    )
    parser.add_argument("--shape", default="exp", type=str, help="limit shape 'exp' or 'triangle[:slope]'")
    parser.add_argument(
        "--scaling",
        default="theoretical",
        choices=["by-first-part", "theoretical", "square-root", "explicit"],
        help="scaling of the diagram, default: %(default)s",
    )
    parser.add_argument("--scaling-value", type=float, help="scaling factor of an explicit scaling")
    parser.add_argument(
        "--grid",
        default=[0.0, 3.0, 0.01],
        type=float,
        nargs=3,
        metavar=("START", "STOP", "STEP"),
        help="grid of the boundary samples, default: %(default)s",
    )
    parser.add_argument(
        "--interval",
        default=[0.0, 3.0],
        type=float,
        nargs=2,
        metavar=("A", "B"),
        help="interval of the sup deviation, default: %(default)s",
    )
    parser.add_argument("--epsilon", default=0.05, type=float, help="deviation tolerance, default: %(default)s")
    parser.add_argument("--stream", default=0, type=int, help="stream id of the chains, default: %(default)s")
    parser.add_argument("--replicas", default=1, type=int, help="number of seeds SEED, SEED+1, ..., default: 1")
    parser.add_argument("--boundary", type=str, help="write the boundary samples as CSV to this file")
    parser.add_argument("--traces", type=str, help="write the traces as CSV to this file")
    parser.add_argument("--stats", type=str, help="write the chain statistics as JSON to this file")
    parser.add_argument("--svg", type=str, help="write an SVG plot to this file")
    add_common_arguments(parser)

    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    if args.replicas < 1:
        parser.error("--replicas must be positive")
    run(simulate, args)


if __name__ == "__main__":
    main(sys.argv[1:])
