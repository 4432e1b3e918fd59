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

""" Run 200 moves of B(10^5, 0.01, 1) from the triangular start for several seeds and compare the rescaled
    diagrams with exp(-x) on [0, 3].
"""

import logging
import sys

from bulsol.export import write_svg
from bulsol.montecarlo import chain_replicas
from bulsol.shapes import LimitShape, ScalingMode
from bulsol.solitaire import SolitaireParams, triangular_start
from bulsol.utils import Timer

SEEDS = range(20190101, 20190121)


# Main program
def main() -> None:
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s %(levelname)s [%(name)s|%(funcName)s]: %(message)s",
    )

    params = SolitaireParams(100000, 0.01, "1/1")
    with Timer() as timer:
        runs = chain_replicas(
            triangular_start(params.n), params, SEEDS, burn_in=0, window=200, scaling=ScalingMode.THEORETICAL
        )
    print("{:d} replicas in {:.2f} sec".format(len(runs), timer.elapsed))

    for stats in runs:
        assert stats.final_report is not None
        print(
            "seed {:d}: sup {:.4f}, new pile deviation {:.4f}, piles/(qn) {:.4f}".format(
                stats.seed,
                stats.final_report.sup_on_interval,
                stats.max_relative_new_pile_deviation(),
                stats.max_pile_ratio(),
            )
        )

    if len(sys.argv) > 1:
        lam = runs[0].final.ord()
        write_svg(sys.argv[1], lam, runs[0].scaling_for(lam), LimitShape.exponential(), x_max=3.0)


if __name__ == "__main__":
    main()
