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

""" Command line tool to run the pile-process oracles: domination of the q-process by threshold processes,
    the Chernoff bound, union-process decay traces and the threshold-survival law.

    Example:

    .. code-block:: shell

       $ bsoracle domination --exhaustive --max-a1 8 --max-r 4
       512 cases, 0 violations
"""

import argparse
import logging
import math
import sys
import textwrap
from fractions import Fraction
from typing import Final, List, Optional

from ..export import write_csv, write_json
from ..montecarlo import make_schedule
from ..solitaire import SolitaireParams, parse_rational
from ..threshold import (
    chernoff_table,
    check_domination,
    decay_trace,
    exhaustive_domination,
    run_union,
    survival_goodness_of_fit,
    threshold_cutoff,
    threshold_survival_sample,
)
from ..utils import InvariantViolation, Timer
from .common import EXIT_OK, add_common_arguments, run, setup_logging

_LOGGER: Final = logging.getLogger(__name__)


def _fractions(values: List[str]) -> List[Fraction]:
    return [parse_rational(v) for v in values]


def domination(args: argparse.Namespace) -> int:
    s_grid, q_grid = _fractions(args.s), _fractions(args.q)
    if args.exhaustive:
        cases = exhaustive_domination(args.max_a1, args.max_r, s_grid, q_grid)
    else:
        seeds = range(args.seed, args.seed + args.samples)
        cases = [
            check_domination(a1, q, s, args.p, r, seeds)
            for a1 in range(1, args.max_a1 + 1)
            for r in range(1, args.max_r + 1)
            for s in s_grid
            for q in q_grid
        ]
    rows = [
        (
            c.a1,
            c.r,
            str(c.s),
            str(c.q),
            c.matrices,
            c.exhaustive,
            c.hypothesis_i,
            c.violations_i,
            c.hypothesis_ii,
            c.violations_ii,
        )
        for c in cases
    ]
    if args.output:
        write_csv(args.output, "domination", rows)
    violations = sum(c.violations for c in cases)
    print("{:d} cases, {:d} violations".format(len(cases), violations))
    if violations:
        raise InvariantViolation("{:d} domination violations".format(violations))
    return EXIT_OK


def chernoff(args: argparse.Namespace) -> int:
    table = chernoff_table(args.m, args.p, args.gamma, args.steps)
    write_csv(args.output or sys.stdout, "chernoff", table)
    exceeded = [gamma for gamma, tail, bound in table if tail > bound]
    if exceeded:
        raise InvariantViolation("exact tail exceeds the Chernoff bound at gamma={!r}".format(exceeded))
    return EXIT_OK


def union(args: argparse.Namespace) -> int:
    q = parse_rational(args.q)
    pq = args.p * float(q)
    n = args.n if args.n is not None else max(1, round(args.a1 / pq))
    schedule = make_schedule(SolitaireParams(n, args.p, q))
    r = schedule.r if args.r is None else args.r
    s = Fraction(schedule.s).limit_denominator(10**6) if args.s is None else parse_rational(args.s)
    gammas = [math.ceil(args.a1 * (1.0 - pq) ** (j * (r + 1))) for j in range(args.chunks)]
    process = run_union(gammas, r, s, args.p, args.seed)
    write_csv(args.output or sys.stdout, "decay", decay_trace(process, args.p, q))
    return EXIT_OK


def survival(args: argparse.Namespace) -> int:
    seeds = range(args.seed, args.seed + args.samples)
    sample = threshold_survival_sample(args.a1, args.s, args.p, args.r, seeds)
    statistic, pvalue = survival_goodness_of_fit(sample, args.a1, args.s, args.p, args.r)
    result = {
        "a1": args.a1,
        "s": args.s,
        "p": args.p,
        "r": args.r,
        "cutoff": threshold_cutoff(args.a1, args.s),
        "samples": args.samples,
        "mean": float(sample.mean()),
        "chi2": statistic,
        "pvalue": pvalue,
        "seeds": [args.seed, args.seed + args.samples - 1],
    }
    print("chi2 = {:.4f}, p-value = {:.4f}".format(statistic, pvalue))
    if args.json:
        write_json(args.json, result)
    return EXIT_OK


def dispatch(args: argparse.Namespace) -> int:
    with Timer() as timer:
        code = args.func(args)
    if args.time:
        print("execution time: {:.2f} sec".format(timer.elapsed), file=sys.stderr)
    return code


# Main program
def main(argv: Optional[List[str]] = None) -> None:
    parser = argparse.ArgumentParser(
        prog="bsoracle",
        description=textwrap.dedent(
            """\
            Command line tool to run the pile-process oracles.

            Example:

              $ bsoracle domination --exhaustive --max-a1 8 --max-r 4
              512 cases, 0 violations
              $ bsoracle chernoff --m 100 --p 0.5
            """
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    dom = sub.add_parser("domination", help="check the domination of the q-process by threshold processes")
    dom.add_argument("--exhaustive", action="store_true", help="enumerate all Bernoulli matrices")
    dom.add_argument("--max-a1", default=8, type=int, help="maximal initial pile size, default: %(default)s")
    dom.add_argument("--max-r", default=4, type=int, help="maximal number of moves, default: %(default)s")
    dom.add_argument("--s", default=["1/4", "1/2", "3/4", "1/1"], nargs="+", help="thresholds 'num/den'")
    dom.add_argument("--q", default=["1/4", "1/2", "3/4", "1/1"], nargs="+", help="proportions 'num/den'")
    dom.add_argument("--p", default=0.5, type=float, help="pick probability of sampled matrices, default: 0.5")
    dom.add_argument("--samples", default=10000, type=int, help="sampled matrices per case, default: %(default)s")
    dom.add_argument("-o", "--output", type=str, help="write the cases as CSV to this file")
    add_common_arguments(dom)
    dom.set_defaults(func=domination)

    che = sub.add_parser("chernoff", help="compare exact binomial tails with the Chernoff bound")
    che.add_argument("--m", required=True, type=int, help="number of trials")
    che.add_argument("--p", required=True, type=float, help="success probability")
    che.add_argument("--gamma", type=float, nargs="+", help="deviations, default: mu*j/STEPS")
    che.add_argument("--steps", default=20, type=int, help="number of grid steps, default: %(default)s")
    che.add_argument("-o", "--output", type=str, help="write the table to this file")
    add_common_arguments(che, seed=False)
    che.set_defaults(func=chernoff)

    uni = sub.add_parser("union", help="trace an (r,s)-union process against exponential decay")
    uni.add_argument("--a1", default=1000, type=int, help="initial pile size, default: %(default)s")
    uni.add_argument("--p", default=0.01, type=float, help="pick probability, default: %(default)s")
    uni.add_argument("--q", default="1/1", type=str, help="proportion 'num/den', default: %(default)s")
    uni.add_argument("--n", type=int, help="number of cards of the schedule, default: a1/(pq)")
    uni.add_argument("--r", type=int, help="chunk length, default: schedule value")
    uni.add_argument("--s", type=str, help="threshold 'num/den', default: schedule value (clamped to 1)")
    uni.add_argument("--chunks", default=3, type=int, help="number of chunks, default: %(default)s")
    uni.add_argument("-o", "--output", type=str, help="write the trace to this file")
    add_common_arguments(uni)
    uni.set_defaults(func=union)

    sur = sub.add_parser("survival", help="test the law of the surviving cards below the threshold")
    sur.add_argument("--a1", default=100, type=int, help="initial pile size, default: %(default)s")
    sur.add_argument("--s", default="1/2", type=str, help="threshold 'num/den', default: %(default)s")
    sur.add_argument("--p", default=0.1, type=float, help="pick probability, default: %(default)s")
    sur.add_argument("--r", default=10, type=int, help="number of moves, default: %(default)s")
    sur.add_argument("--samples", default=100000, type=int, help="number of seeds, default: %(default)s")
    sur.add_argument("--json", type=str, help="write the result as JSON to this file")
    add_common_arguments(sur)
    sur.set_defaults(func=survival)

    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    run(dispatch, args)


if __name__ == "__main__":
    main(sys.argv[1:])
