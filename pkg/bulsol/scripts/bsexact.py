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

""" Command line tool to compute the exact stationary distribution of the p-random q-proportion Bulgarian
    solitaire for small n.

    Example:

    .. code-block:: shell

       $ bsexact --n 2 --p 0.5 --q 1/2
       # bulsol stationary v1
       state,probability
       2,0.3333333333333333
       1+1,0.6666666666666666
"""

import argparse
import logging
import sys
import textwrap
from typing import Final, List, Optional

from ..export import write_csv, write_json
from ..markov import build_kernel, reachability, stationary, stationary_shape_mass, total_variation
from ..montecarlo import empirical_distribution
from ..shapes import LimitShape, ScalingMode
from ..solitaire import SolitaireParams
from ..utils import Timer
from .common import EXIT_OK, add_common_arguments, parse_grid, run, setup_logging

_LOGGER: Final = logging.getLogger(__name__)


def exact(args: argparse.Namespace) -> int:
    params = SolitaireParams(args.n, args.p, args.q)
    with Timer() as timer:
        kernel = build_kernel(params)
        reach = reachability(kernel)
        pi = stationary(kernel)
    exec_time = timer.elapsed

    write_csv(args.output or sys.stdout, "stationary", [(str(lam), prob) for lam, prob in pi.items()])
    if args.kernel:
        write_csv(args.kernel, "kernel", [(str(a), str(b), prob) for a, b, prob in kernel.entries()])
    if args.mass:
        shape = LimitShape.from_str(args.shape)
        scaling = ScalingMode.from_str(args.scaling)
        rows = [
            (float(x), eps, stationary_shape_mass(pi, shape, scaling, eps, float(x), args.scaling_value))
            for x in parse_grid(args.grid)
            for eps in args.epsilon
        ]
        write_csv(args.mass, "shape-mass", rows)

    summary = {
        "params": params.to_json(),
        "states": len(kernel.index),
        "method": pi.method,
        "residual": pi.residual,
        "iterations": pi.iterations,
        "reachability": reach.to_json(),
    }
    if args.compare_mc:
        counts = empirical_distribution(params, args.mc_samples, burn_in=args.mc_burn_in, seed=args.seed)
        tv = total_variation(pi, counts)
        summary["total_variation"] = tv
        summary["mc_samples"] = args.mc_samples
        summary["seeds"] = [args.seed]
        print("total variation distance: {:.6f}".format(tv), file=sys.stderr if not args.output else sys.stdout)
    if args.json:
        write_json(args.json, summary)

    # print execution time only if desired
    if args.time:
        print("execution time: {:.2f} sec".format(exec_time), file=sys.stderr)
    return EXIT_OK


# Main program
def main(argv: Optional[List[str]] = None) -> None:
    parser = argparse.ArgumentParser(
        prog="bsexact",
        description=textwrap.dedent(
            """\
            Command line tool to compute the exact stationary distribution of the
            p-random q-proportion Bulgarian solitaire on the partitions of n.

            Example:

              $ bsexact --n 2 --p 0.5 --q 1/2
              # bulsol stationary v1
              state,probability
              2,0.3333333333333333
              1+1,0.6666666666666666
            """
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument("--n", required=True, type=int, help="number of cards")
    parser.add_argument("--p", required=True, type=float, help="pick probability (p < 1)")
    parser.add_argument("--q", required=True, type=str, help="candidate proportion 'num/den'")
    parser.add_argument("-o", "--output", type=str, help="write the stationary distribution to this file")
    parser.add_argument("--kernel", type=str, help="write the transition kernel as CSV to this file")
    parser.add_argument("--mass", type=str, help="write the shape-mass table as CSV to this file")
    parser.add_argument("--shape", default="exp", type=str, help="limit shape of the mass table, default: exp")
    parser.add_argument(
        "--scaling",
        default="by-first-part",
        choices=["by-first-part", "theoretical", "square-root", "explicit"],
        help="scaling of the mass table, default: %(default)s",
    )
    parser.add_argument("--scaling-value", type=float, help="scaling factor of an explicit scaling")
    parser.add_argument(
        "--grid",
        default=[0.0, 3.0, 0.5],
        type=float,
        nargs=3,
        metavar=("START", "STOP", "STEP"),
        help="positions of the mass table, default: %(default)s",
    )
    parser.add_argument(
        "--epsilon",
        default=[0.05, 0.1, 0.2],
        type=float,
        nargs="+",
        help="tolerances of the mass table, default: %(default)s",
    )
    parser.add_argument("--compare-mc", action="store_true", help="compare with a Monte Carlo run")
    parser.add_argument("--mc-samples", default=2000000, type=int, help="Monte Carlo samples, default: %(default)s")
    parser.add_argument("--mc-burn-in", type=int, help="Monte Carlo burn-in, default: schedule value D")
    parser.add_argument("--json", type=str, help="write a JSON summary to this file")
    add_common_arguments(parser)

    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    run(exact, args)


if __name__ == "__main__":
    main(sys.argv[1:])
