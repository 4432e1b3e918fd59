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

from .markov import (  # noqa
    StateIndex,
    StationaryDistribution,
    TransitionKernel,
    build_kernel,
    stationary,
    total_variation,
)
from .montecarlo import ChainStats, Schedule, chain_replicas, empirical_distribution, make_schedule, run_chain  # noqa
from .partitions import Configuration, Partition, WeakComposition  # noqa
from .shapes import LimitShape, ScalingFactor, ScalingMode  # noqa
from .solitaire import SigmaRule, SolitaireParams, play, random_move, step_deterministic, triangular_start  # noqa
from .utils import CapacityError, InvariantViolation  # noqa
