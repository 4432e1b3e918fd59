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

""" Monte Carlo simulation of :math:`\\mathscr{B}(n,p,q)` for large ``n``: burn-in schedule, stationary-window
sampling with deviation statistics against limit shapes, and regime scans.

Example:

.. code-block:: python

    params = SolitaireParams(100000, 0.01, 1)
    stats = run_chain(triangular_start(params.n), params, burn_in=0, window=200, seed=1)
    print(stats.final_report.sup_on_interval)
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Any, Callable, Dict, Final, List, Optional, Sequence, Tuple, Union

import numpy as np

from .partitions import Configuration, Partition, WeakComposition
from .rng import RngStream
from .settings import Settings
from .shapes import DeviationReport, LimitShape, RescaledBoundary, ScalingFactor, ScalingMode, deviation, sup_distance
from .solitaire import SolitaireParams, random_move, triangular_start
from .utils import CapacityError, ceil_div, parallel_map

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants
# ------------------------------------------------------------------------------------------------------------------- #

SCHEMA_VERSION: Final = 1
BURN_IN_FACTOR: Final = 14
DEFAULT_INTERVAL: Final = (0.0, 3.0)
DEFAULT_EPSILON: Final = 0.05
GRID_POINTS: Final = 301

LABEL_EXPONENTIAL: Final = "exponential"
LABEL_TRIANGLE: Final = "triangle"
LABEL_AMBIGUOUS: Final = "ambiguous"
LABEL_INTERMEDIATE: Final = "intermediate"


# ------------------------------------------------------------------------------------------------------------------- #
# Schedule
# ------------------------------------------------------------------------------------------------------------------- #


class Schedule:
    """Burn-in and chunking constants of a chain (natural logarithm throughout).

    :param burn_in: The burn-in :math:`D = \\lceil 14 \\ln n / (pq) \\rceil` (at least 1).
    :param window_bound: The window :math:`M = \\lceil n^2/p \\rceil` of the convergence argument.
    :param window: The practical sampling window :math:`\\max(10 D, 10^4)`.
    :param r: The chunk length :math:`r_n = \\lceil \\rho_n^{-1/3}/p \\rceil`.
    :param rho: :math:`\\rho_n = p q^2 n / (1 + \\ln n)`.
    :param s: The chunk threshold :math:`s_n = q (1 + 2 p r_n)`.
    """

    __slots__ = ("burn_in", "window_bound", "window", "r", "rho", "s")

    def __init__(self, burn_in: int, window_bound: int, window: int, r: int, rho: float, s: float) -> None:
        self.burn_in = burn_in
        self.window_bound = window_bound
        self.window = window
        self.r = r
        self.rho = rho
        self.s = s

    def to_json(self) -> dict:
        return {
            "burn_in": self.burn_in,
            "window_bound": self.window_bound,
            "window": self.window,
            "r": self.r,
            "rho": self.rho,
            "s": self.s,
            "log": "natural",
        }

    def __repr__(self) -> str:
        return "Schedule(D={:d}, M={:d}, window={:d}, r={:d}, rho={:.6g}, s={:.6g})".format(
            self.burn_in, self.window_bound, self.window, self.r, self.rho, self.s
        )


def make_schedule(
    params: SolitaireParams, window_factor: Optional[int] = None, min_window: Optional[int] = None
) -> Schedule:
    """Compute the schedule of a chain.

    :param params: The parameters of the chain.
    :type params: SolitaireParams
    :param window_factor: The factor of the practical window (default: setting ``window_factor``).
    :param min_window: The minimal practical window (default: setting ``min_window``).
    :returns: The schedule.
    :rtype: ``Schedule``

    >>> sched = make_schedule(SolitaireParams(100000, 0.01, 1))
    >>> sched.burn_in, sched.r, sched.window_bound, round(sched.rho, 2)
    (16119, 24, 1000000000000, 79.92)
    """
    window_factor = Settings["window_factor"] if window_factor is None else window_factor
    min_window = Settings["min_window"] if min_window is None else min_window
    n, p, q = params.n, params.p, float(params.q)
    log_n = math.log(n)
    burn_in = max(1, math.ceil(BURN_IN_FACTOR * log_n / (p * q)))
    window_bound = math.ceil(Fraction(n * n) / Fraction(repr(p)))
    rho = p * q * q * n / (1.0 + log_n)
    r = max(1, math.ceil(rho ** (-1.0 / 3.0) / p))
    return Schedule(burn_in, window_bound, max(window_factor * burn_in, min_window), r, rho, q * (1.0 + 2.0 * p * r))


# ------------------------------------------------------------------------------------------------------------------- #
# Simulation kernel
# ------------------------------------------------------------------------------------------------------------------- #


def _initial_parts(alpha0: Configuration) -> np.ndarray:
    return np.asarray(alpha0.parts, dtype=np.int64)


def _simulate(
    parts: np.ndarray,
    params: SolitaireParams,
    generator: np.random.Generator,
    moves: int,
    on_move: Optional[Callable[[int, np.ndarray, int], None]] = None,
    first_move: int = 1,
) -> np.ndarray:
    """Perform ``moves`` random moves; ``on_move(t, parts, kappa)`` is called after every move."""
    q, p = params.q, params.p
    for t in range(first_move, first_move + moves):
        parts, _, kappa = random_move(parts, q, p, generator)
        if on_move is not None:
            on_move(t, parts, kappa)
    return parts


def _sorted_partition(parts: np.ndarray) -> Partition:
    return Partition(np.sort(parts[parts > 0])[::-1].tolist())


# ------------------------------------------------------------------------------------------------------------------- #
# Chain statistics
# ------------------------------------------------------------------------------------------------------------------- #


class ChainStats:
    """Statistics of a recorded chain run.

    The traces have one entry per recorded move: the sup deviation of the sorted partition and of the unsorted
    composition, the pile count :math:`N(\\alpha)`, the new pile :math:`\\alpha_1`, the candidate count
    :math:`\\kappa`, the rounding effect :math:`R` and the number of initial piles still alive.
    """

    def __init__(
        self,
        params: SolitaireParams,
        schedule: Schedule,
        seed: int,
        stream: int,
        burn_in: int,
        window: int,
        stride: int,
        shape: LimitShape,
        scaling: ScalingMode,
        scaling_value: Optional[float],
        interval: Tuple[float, float],
        epsilon: float,
        grid: np.ndarray,
    ) -> None:
        self.params = params
        self.schedule = schedule
        self.seed = seed
        self.stream = stream
        self.burn_in = burn_in
        self.window = window
        self.stride = stride
        self.shape = shape
        self.scaling = scaling
        self.scaling_value = scaling_value
        self.interval = interval
        self.epsilon = epsilon
        self.grid = grid
        self.moves: List[int] = []
        self.sup_sorted: List[float] = []
        self.sup_unsorted: List[float] = []
        self.num_piles: List[int] = []
        self.new_pile: List[int] = []
        self.kappa: List[int] = []
        self.rounding: List[float] = []
        self.initial_piles_alive: List[int] = []
        self.snapshots: List[Partition] = []
        self._within_counts = np.zeros(len(grid), dtype=np.int64)
        self.final: WeakComposition = WeakComposition([])
        self.final_report: Optional[DeviationReport] = None

    def scaling_for(self, config: Configuration) -> ScalingFactor:
        return ScalingFactor.for_config(self.scaling, config, self.params.p, self.params.q, self.scaling_value)

    def record(self, t: int, parts: np.ndarray, kappa: int, initial_alive: int) -> None:
        lam = _sorted_partition(parts)
        composition = WeakComposition(parts.tolist())
        a = self.scaling_for(lam)
        self.moves.append(t)
        self.sup_sorted.append(sup_distance(lam, a, self.shape, self.interval))
        self.sup_unsorted.append(sup_distance(composition, a, self.shape, self.interval))
        self.num_piles.append(lam.num_piles)
        self.new_pile.append(int(parts[0]))
        self.kappa.append(kappa)
        self.rounding.append(float(kappa - self.params.q * self.params.n))
        self.initial_piles_alive.append(initial_alive)
        self.snapshots.append(lam)
        dev = np.abs(RescaledBoundary(lam, a)(self.grid) - self.shape(self.grid))
        self._within_counts += dev < self.epsilon

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def mean_sup(self) -> float:
        return float(np.mean(self.sup_sorted)) if self.sup_sorted else math.nan

    @property
    def max_sup(self) -> float:
        return float(np.max(self.sup_sorted)) if self.sup_sorted else math.nan

    @property
    def fraction_within(self) -> np.ndarray:
        """The fraction of recorded states within ``epsilon`` of the shape at every grid point."""
        if not self.moves:
            return np.zeros(len(self.grid))
        return self._within_counts / len(self.moves)

    def max_relative_new_pile_deviation(self) -> float:
        """Return :math:`\\max |\\alpha_1 - pqn| / (pqn)` over the recorded moves."""
        pqn = self.params.pqn
        return max((abs(v - pqn) / pqn for v in self.new_pile), default=0.0)

    def max_pile_ratio(self) -> float:
        """Return :math:`\\max N(\\alpha) / (qn)` over the recorded moves."""
        qn = float(self.params.q) * self.params.n
        return max((v / qn for v in self.num_piles), default=0.0)

    def trace_rows(self) -> List[Tuple[int, int, int]]:
        """Return the trace rows ``(move, N, new_pile)``."""
        return list(zip(self.moves, self.num_piles, self.new_pile))

    def boundary_rows(self) -> List[Tuple[float, float, float, float]]:
        """Return the rows ``(x, rescaled_y, shape_y, abs_dev)`` of the final sorted state on the grid."""
        lam = _sorted_partition(np.asarray(self.final.parts, dtype=np.int64))
        if lam.n == 0:
            return []
        ys = RescaledBoundary(lam, self.scaling_for(lam))(self.grid)
        phis = self.shape(self.grid)
        return [(float(x), float(y), float(f), float(abs(y - f))) for x, y, f in zip(self.grid, ys, phis)]

    def to_json(self) -> dict:
        report = self.final_report.to_json() if self.final_report is not None else {}
        return {
            "schema_version": SCHEMA_VERSION,
            "params": self.params.to_json(),
            "schedule": self.schedule.to_json(),
            "seeds": [self.seed],
            "stream": self.stream,
            "burn_in": self.burn_in,
            "window": self.window,
            "stride": self.stride,
            "shape": self.shape.label,
            "scaling": self.scaling.name.lower(),
            "final_state": str(self.final),
            "deviation": dict(
                report,
                epsilon=self.epsilon,
                interval=list(self.interval),
                mean_sup=self.mean_sup if self.moves else None,
                max_sup=self.max_sup if self.moves else None,
                recorded=len(self.moves),
            ),
            "traces": {
                "max_relative_new_pile_deviation": self.max_relative_new_pile_deviation(),
                "max_pile_ratio": self.max_pile_ratio(),
                "initial_piles_alive": self.initial_piles_alive[-1] if self.initial_piles_alive else None,
            },
        }

    def __repr__(self) -> str:
        return "ChainStats({!r}, seed={:d}, recorded={:d})".format(self.params, self.seed, len(self.moves))


def run_chain(
    alpha0: Configuration,
    params: SolitaireParams,
    schedule: Optional[Schedule] = None,
    window: Optional[int] = None,
    stride: Optional[int] = None,
    seed: Optional[int] = None,
    stream: int = 0,
    shape: Optional[LimitShape] = None,
    scaling: Union[ScalingMode, str] = ScalingMode.THEORETICAL,
    scaling_value: Optional[float] = None,
    interval: Tuple[float, float] = DEFAULT_INTERVAL,
    epsilon: float = DEFAULT_EPSILON,
    grid: Optional[Sequence[float]] = None,
    burn_in: Optional[int] = None,
    snapshot_budget: Optional[int] = None,
) -> ChainStats:
    """Run a chain: ``burn_in`` moves, then ``window`` recorded moves with the given stride.

    :param alpha0: The initial configuration of ``params.n`` cards.
    :param params: The parameters of the chain.
    :param schedule: The schedule (default :const:`None`, which means :func:`make_schedule`).
    :param window: The number of moves after the burn-in (default: the schedule's practical window).
    :param stride: Record every ``stride``-th move of the window (default: 1 up to setting
        ``auto_snapshot_limit`` moves, else thinned to that many records).
    :param seed: The seed (default: setting ``default_seed``).
    :param stream: The stream id of the chain.
    :param shape: The limit shape (default: :math:`e^{-x}`).
    :param scaling: The scaling mode (default: theoretical).
    :param scaling_value: The value of an explicit scaling.
    :param interval: The interval of the sup deviation.
    :param epsilon: The tolerance of the within-fractions.
    :param grid: The grid of the pointwise deviations (default: 301 points on the interval).
    :param burn_in: The number of burn-in moves (default: the schedule's ``D``).
    :param snapshot_budget: The maximal number of records (default: setting ``snapshot_budget``).
    :returns: The chain statistics.
    :rtype: ``ChainStats``
    :raises ValueError:
        Will be raised for invalid arguments.
    :raises CapacityError:
        Will be raised if the records would exceed the snapshot budget.
    """
    if alpha0.n != params.n:
        raise ValueError("configuration holds {:d} cards, expected {:d}".format(alpha0.n, params.n))
    schedule = make_schedule(params) if schedule is None else schedule
    window = schedule.window if window is None else window
    burn_in = schedule.burn_in if burn_in is None else burn_in
    seed = Settings["default_seed"] if seed is None else seed
    if window < 0 or burn_in < 0:
        raise ValueError("window and burn-in must be non-negative ({!r}, {!r})".format(window, burn_in))
    if stride is None:
        stride = max(1, ceil_div(window, Settings["auto_snapshot_limit"]))
    elif stride < 1:
        raise ValueError("stride must be positive ({!r})".format(stride))
    budget = Settings["snapshot_budget"] if snapshot_budget is None else snapshot_budget
    if window // stride > budget:
        raise CapacityError(
            "{:d} records requested, the snapshot budget is {:d}".format(window // stride, budget), budget
        )
    scaling = ScalingMode.from_str(scaling) if isinstance(scaling, str) else scaling
    shape = LimitShape.exponential() if shape is None else shape
    lo, hi = interval
    if not 0 <= lo <= hi:
        raise ValueError("invalid interval [{!r}, {!r}]".format(lo, hi))
    xs = np.linspace(lo, hi if math.isfinite(hi) else lo + 10.0, GRID_POINTS) if grid is None else np.asarray(grid)
    stats = ChainStats(
        params, schedule, seed, stream, burn_in, window, stride, shape, scaling, scaling_value, interval, epsilon, xs
    )
    generator = RngStream(seed, stream).generator
    initial_bowls = len(alpha0.parts)
    parts = _simulate(_initial_parts(alpha0), params, generator, burn_in)
    _LOGGER.info("burn-in of %d moves finished for %s (seed %d)", burn_in, params, seed)

    def on_move(t: int, current: np.ndarray, kappa: int) -> None:
        if (t - burn_in) % stride == 0:
            stats.record(t, current, kappa, int(np.count_nonzero(current[t : t + initial_bowls])))

    parts = _simulate(parts, params, generator, window, on_move, first_move=burn_in + 1)
    stats.final = WeakComposition(parts.tolist())
    lam = _sorted_partition(parts)
    stats.final_report = deviation(lam, params.n, stats.scaling_for(lam), shape, xs, interval, epsilon)
    _LOGGER.info("chain %s finished after %d moves: %d records", params, burn_in + window, len(stats))
    return stats


def deviation_timeseries(
    stats: ChainStats, epsilon: float, interval: Optional[Tuple[float, float]] = None
) -> float:
    """Return the fraction of recorded states whose sup deviation on ``interval`` is below ``epsilon``.

    :param stats: The chain statistics.
    :param epsilon: The tolerance.
    :param interval: The interval (default: the interval of the run).
    :returns: The fraction in :math:`[0, 1]`.
    :rtype: ``float``
    :raises ValueError:
        Will be raised for statistics without records.
    """
    if not len(stats):
        raise ValueError("chain statistics without recorded states")
    if interval is None or tuple(interval) == tuple(stats.interval):
        sups = np.asarray(stats.sup_sorted)
    else:
        sups = np.array([sup_distance(lam, stats.scaling_for(lam), stats.shape, interval) for lam in stats.snapshots])
    return float(np.mean(sups < epsilon))


def chain_replicas(
    alpha0: Configuration,
    params: SolitaireParams,
    seeds: Sequence[int],
    threads: Optional[int] = None,
    **kwargs: Any,
) -> List[ChainStats]:
    """Run :func:`run_chain` for several seeds concurrently; the results are ordered like ``seeds``."""
    return parallel_map(lambda seed: run_chain(alpha0, params, seed=seed, **kwargs), seeds, threads)


# ------------------------------------------------------------------------------------------------------------------- #
# Sampling helpers
# ------------------------------------------------------------------------------------------------------------------- #


def empirical_distribution(
    params: SolitaireParams,
    samples: int,
    burn_in: Optional[int] = None,
    seed: Optional[int] = None,
    stream: int = 0,
    alpha0: Optional[Configuration] = None,
) -> Dict[Partition, int]:
    """Count the sorted states of ``samples`` consecutive moves after the burn-in.

    :returns: The counts per partition.
    :rtype: ``dict``
    """
    if samples < 1:
        raise ValueError("number of samples must be positive ({!r})".format(samples))
    alpha0 = triangular_start(params.n) if alpha0 is None else alpha0
    burn_in = make_schedule(params).burn_in if burn_in is None else burn_in
    seed = Settings["default_seed"] if seed is None else seed
    generator = RngStream(seed, stream).generator
    parts = _simulate(_initial_parts(alpha0), params, generator, burn_in)
    counts: Dict[bytes, int] = {}

    def on_move(t: int, current: np.ndarray, kappa: int) -> None:
        key = np.sort(current[current > 0]).tobytes()
        counts[key] = counts.get(key, 0) + 1

    _simulate(parts, params, generator, samples, on_move)
    return {
        Partition(np.frombuffer(key, dtype=np.int64)[::-1].tolist()): count for key, count in counts.items()
    }


def consumption_time(
    alpha0: Configuration, params: SolitaireParams, pile_index: int, max_moves: int, rng: RngStream
) -> Optional[int]:
    """Return the number of moves until the pile ``pile_index`` (1-based, creation-time order) of ``alpha0`` is
    empty, or :const:`None` if it survives ``max_moves`` moves.
    """
    if pile_index < 1:
        raise ValueError("the index of a pile is 1-based ({!r})".format(pile_index))
    parts = _initial_parts(alpha0)
    position = pile_index - 1
    if position >= len(parts) or parts[position] == 0:
        return 0
    for t in range(1, max_moves + 1):
        parts, _, _ = random_move(parts, params.q, params.p, rng.generator)
        position += 1
        if position >= len(parts) or parts[position] == 0:
            return t
    return None


# ------------------------------------------------------------------------------------------------------------------- #
# Regime scans
# ------------------------------------------------------------------------------------------------------------------- #


class RegimeSpec:
    """A list of parameter points of a regime scan.

    :param points: The parameters of the scanned chains.
    :type points: list(SolitaireParams)
    """

    def __init__(self, points: Sequence[SolitaireParams]) -> None:
        self.points = list(points)

    @classmethod
    def from_json(cls, data: Sequence[Union[Sequence, dict]]) -> RegimeSpec:
        """Create a spec from a JSON list of ``[n, p, "num/den"]`` triples or ``{"n", "p", "q"}`` objects.

        :raises ValueError:
            Will be raised for an invalid entry.
        """
        if not isinstance(data, list):
            raise ValueError("regime spec must be a JSON list")
        points = []
        for entry in data:
            try:
                if isinstance(entry, dict):
                    n, p, q = entry["n"], entry["p"], entry["q"]
                else:
                    n, p, q = entry
            except (KeyError, TypeError, ValueError):
                raise ValueError("invalid regime spec entry {!r}".format(entry))
            points.append(SolitaireParams(int(n), float(p), str(q)))
        return cls(points)

    def __len__(self) -> int:
        return len(self.points)


class RegimeRow:
    """One row of a regime scan."""

    FIELDS: Final = (
        "n",
        "p",
        "q",
        "pq2n",
        "pq2n_over_log",
        "label",
        "sup_exp",
        "sup_triangle",
        "unsorted_exp",
        "unsorted_triangle",
    )

    def __init__(
        self,
        params: SolitaireParams,
        label: str,
        sup_exp: float,
        sup_triangle: float,
        unsorted_exp: float,
        unsorted_triangle: float,
    ) -> None:
        self.params = params
        self.label = label
        self.sup_exp = sup_exp
        self.sup_triangle = sup_triangle
        self.unsorted_exp = unsorted_exp
        self.unsorted_triangle = unsorted_triangle

    @property
    def pq2n(self) -> float:
        return self.params.regime_value

    @property
    def pq2n_over_log(self) -> float:
        return self.params.regime_value / math.log(self.params.n) if self.params.n > 1 else math.inf

    def as_tuple(self) -> tuple:
        q = self.params.q
        return (
            self.params.n,
            self.params.p,
            "{}/{}".format(q.numerator, q.denominator),
            self.pq2n,
            self.pq2n_over_log,
            self.label,
            self.sup_exp,
            self.sup_triangle,
            self.unsorted_exp,
            self.unsorted_triangle,
        )

    def __repr__(self) -> str:
        return "RegimeRow({!r}, label={!r})".format(self.params, self.label)


def classify_fit(sup_exp: float, sup_triangle: float, epsilon: float, tie_window: float) -> str:
    """Label the better-fitting shape.

    >>> classify_fit(0.02, 0.3, 0.05, 0.01), classify_fit(0.2, 0.3, 0.05, 0.01), classify_fit(0.03, 0.035, 0.05, 0.01)
    ('exponential', 'intermediate', 'ambiguous')
    """
    if sup_exp > epsilon and sup_triangle > epsilon:
        return LABEL_INTERMEDIATE
    if abs(sup_exp - sup_triangle) < tie_window:
        return LABEL_AMBIGUOUS
    return LABEL_EXPONENTIAL if sup_exp < sup_triangle else LABEL_TRIANGLE


def regime_point(
    params: SolitaireParams,
    seed: int,
    stream: int = 0,
    moves: Optional[int] = None,
    samples: int = 10,
    scaling: ScalingMode = ScalingMode.BY_FIRST_PART,
    epsilon: Optional[float] = None,
    tie_window: Optional[float] = None,
) -> RegimeRow:
    """Run one chain of a regime scan and compare its states with :math:`e^{-x}` and the triangle.

    The chain is run for ``moves`` moves (default: the schedule's burn-in) and then ``samples`` further states
    are compared on :math:`[0, \\infty)`; the mean sup deviations are reported.

    :raises ValueError:
        Will be raised if ``samples`` is not positive or ``moves`` is negative.
    """
    if samples < 1:
        raise ValueError("number of samples must be positive ({!r})".format(samples))
    if moves is not None and moves < 0:
        raise ValueError("number of moves must be non-negative ({!r})".format(moves))
    epsilon = Settings["regime_epsilon"] if epsilon is None else epsilon
    tie_window = Settings["regime_tie_window"] if tie_window is None else tie_window
    moves = make_schedule(params).burn_in if moves is None else moves
    generator = RngStream(seed, stream).generator
    parts = _simulate(_initial_parts(triangular_start(params.n)), params, generator, moves)
    shapes = (LimitShape.exponential(), LimitShape.triangle())
    sums = np.zeros(4)

    def on_move(t: int, current: np.ndarray, kappa: int) -> None:
        composition = WeakComposition(current.tolist())
        lam = _sorted_partition(current)
        a = ScalingFactor.for_config(scaling, lam, params.p, params.q)
        for j, phi in enumerate(shapes):
            sums[j] += sup_distance(lam, a, phi)
            sums[j + 2] += sup_distance(composition, a, phi)

    _simulate(parts, params, generator, samples, on_move)
    means = sums / samples
    label = classify_fit(means[0], means[1], epsilon, tie_window)
    _LOGGER.debug("regime point %s: exp %.4f, triangle %.4f -> %s", params, means[0], means[1], label)
    return RegimeRow(params, label, *(float(v) for v in means))


def regime_scan(
    spec: RegimeSpec,
    seed: Optional[int] = None,
    moves: Optional[int] = None,
    samples: int = 10,
    scaling: ScalingMode = ScalingMode.BY_FIRST_PART,
    threads: Optional[int] = None,
) -> List[RegimeRow]:
    """Run a regime scan; the rows are reported only, no fit is asserted.

    Every point runs on its own stream of the master seed.
    """
    if samples < 1:
        raise ValueError("number of samples must be positive ({!r})".format(samples))
    seed = Settings["default_seed"] if seed is None else seed
    jobs = list(enumerate(spec.points))
    return parallel_map(
        lambda job: regime_point(job[1], seed, job[0], moves, samples, scaling), jobs, threads
    )


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "Schedule",
    "make_schedule",
    "ChainStats",
    "run_chain",
    "deviation_timeseries",
    "chain_replicas",
    "empirical_distribution",
    "consumption_time",
    "RegimeSpec",
    "RegimeRow",
    "classify_fit",
    "regime_point",
    "regime_scan",
]
