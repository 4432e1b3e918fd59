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

""" Tests for code in `bulsol.montecarlo`. """

import math

import numpy as np
import pytest

from bulsol.export import SCHEMAS
from bulsol.markov import build_kernel, stationary, total_variation
from bulsol.montecarlo import (
    RegimeRow,
    RegimeSpec,
    chain_replicas,
    classify_fit,
    consumption_time,
    deviation_timeseries,
    empirical_distribution,
    make_schedule,
    regime_point,
    regime_scan,
    run_chain,
)
from bulsol.partitions import Partition, WeakComposition
from bulsol.rng import RngStream
from bulsol.shapes import LimitShape, ScalingMode
from bulsol.solitaire import SolitaireParams, triangular_start
from bulsol.utils import CapacityError

DECAY_PARAMS = SolitaireParams(100000, 0.01, "1/1")


class TestSchedule:
    def test_decay_params(self) -> None:
        schedule = make_schedule(DECAY_PARAMS)
        assert schedule.burn_in == 16119
        assert schedule.r == 24
        assert schedule.rho == pytest.approx(79.92, abs=0.01)
        assert schedule.window_bound == 10**12
        assert schedule.window == 161190
        assert schedule.s == pytest.approx(1.48)

    def test_min_window(self) -> None:
        schedule = make_schedule(SolitaireParams(100, 0.5, "1/1"), window_factor=10, min_window=10000)
        assert schedule.window == 10000
        assert schedule.to_json()["log"] == "natural"

    @pytest.mark.parametrize("n, p, q", [(1, 1.0, "1/1"), (3, 1.0, "1/1"), (2, 0.9, "1/2")])
    def test_guards(self, n: int, p: float, q: str) -> None:
        schedule = make_schedule(SolitaireParams(n, p, q))
        assert schedule.burn_in >= 1
        assert schedule.r >= 1
        assert schedule.s >= float(SolitaireParams(n, p, q).q)


class TestRunChain:
    def test_small_chain(self) -> None:
        params = SolitaireParams(500, 0.2, "1/2")
        stats = run_chain(triangular_start(500), params, burn_in=100, window=50, seed=3)
        assert len(stats) == 50
        assert stats.moves[0] == 101 and stats.moves[-1] == 150
        assert stats.final.n == 500
        assert all(lam.n == 500 for lam in stats.snapshots)
        assert all(s <= u + 1e-12 for s, u in zip(stats.sup_sorted, stats.sup_unsorted))
        assert np.all((stats.fraction_within >= 0) & (stats.fraction_within <= 1))
        assert stats.final_report is not None
        assert len(stats.trace_rows()) == 50
        assert len(stats.boundary_rows()) == 301

    def test_initial_piles_alive(self) -> None:
        params = SolitaireParams(200, 0.3, "1/4")
        stats = run_chain(triangular_start(200), params, burn_in=0, window=300, seed=5)
        alive = stats.initial_piles_alive
        assert alive[0] <= triangular_start(200).num_piles
        assert all(b <= a for a, b in zip(alive, alive[1:]))

    def test_stride(self) -> None:
        params = SolitaireParams(300, 0.3, "1/2")
        stats = run_chain(triangular_start(300), params, burn_in=10, window=100, stride=25, seed=1)
        assert stats.moves == [35, 60, 85, 110]

    def test_auto_stride(self) -> None:
        params = SolitaireParams(100, 0.3, "1/2")
        stats = run_chain(triangular_start(100), params, burn_in=0, window=5000, seed=1)
        assert stats.stride == 5
        assert len(stats) == 1000

    def test_window_zero(self) -> None:
        params = SolitaireParams(50, 0.3, "1/2")
        stats = run_chain(triangular_start(50), params, burn_in=0, window=0, seed=1)
        assert len(stats) == 0
        assert stats.final == WeakComposition(triangular_start(50).parts)
        assert math.isnan(stats.mean_sup)
        with pytest.raises(ValueError):
            deviation_timeseries(stats, 0.1)

    def test_deterministic(self) -> None:
        params = SolitaireParams(1000, 0.1, "1/3")
        a = run_chain(triangular_start(1000), params, burn_in=200, window=40, seed=77, stream=2)
        b = run_chain(triangular_start(1000), params, burn_in=200, window=40, seed=77, stream=2)
        assert a.to_json() == b.to_json()
        assert a.sup_sorted == b.sup_sorted
        c = run_chain(triangular_start(1000), params, burn_in=200, window=40, seed=78, stream=2)
        assert c.new_pile != a.new_pile

    def test_raises_CapacityError(self) -> None:
        params = SolitaireParams(50, 0.3, "1/2")
        with pytest.raises(CapacityError):
            run_chain(triangular_start(50), params, burn_in=0, window=100, stride=1, snapshot_budget=10)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"window": -1},
            {"burn_in": -1},
            {"stride": 0},
            {"interval": (2.0, 1.0)},
        ],
    )
    def test_raises_ValueError(self, kwargs: dict) -> None:
        params = SolitaireParams(50, 0.3, "1/2")
        defaults = {"burn_in": 0, "window": 10}
        with pytest.raises(ValueError):
            run_chain(triangular_start(50), params, **dict(defaults, **kwargs))
        with pytest.raises(ValueError):
            run_chain(triangular_start(51), params, burn_in=0, window=10)


class TestDeviationTimeseries:
    @pytest.fixture(scope="class")
    def stats(self):  # type: ignore
        params = SolitaireParams(2000, 0.1, "1/1")
        return run_chain(triangular_start(2000), params, burn_in=300, window=60, seed=11)

    def test_bounds(self, stats) -> None:  # type: ignore
        assert deviation_timeseries(stats, 10.0) == 1.0
        assert deviation_timeseries(stats, 0.0) == 0.0

    def test_monotone(self, stats) -> None:  # type: ignore
        fractions = [deviation_timeseries(stats, eps) for eps in (0.01, 0.05, 0.1, 0.2, 0.5)]
        assert fractions == sorted(fractions)

    def test_interval(self, stats) -> None:  # type: ignore
        whole = deviation_timeseries(stats, 0.1, (0.0, 3.0))
        part = deviation_timeseries(stats, 0.1, (0.5, 1.0))
        assert part >= whole


def test_triangular_start_200_moves() -> None:
    """200 moves of B(10^5, 0.01, 1) from the triangular start, compared with exp(-x) on [0, 3]."""
    seeds = list(range(20190101, 20190121))
    runs = chain_replicas(
        triangular_start(100000), DECAY_PARAMS, seeds, burn_in=0, window=200, scaling=ScalingMode.THEORETICAL
    )
    assert [stats.seed for stats in runs] == seeds
    sups = [stats.final_report.sup_on_interval for stats in runs]  # type: ignore
    assert sum(sup < 0.1 for sup in sups) >= 18
    for stats in runs:
        assert stats.max_relative_new_pile_deviation() <= 0.2
        assert stats.max_pile_ratio() <= 0.05


def test_empirical_distribution_matches_stationary() -> None:
    params = SolitaireParams(8, 0.3, "1/2")
    counts = empirical_distribution(params, 200000, burn_in=1000, seed=20190101)
    assert sum(counts.values()) == 200000
    assert all(lam.n == 8 for lam in counts)
    pi = stationary(build_kernel(params))
    assert total_variation(pi, counts) <= 0.05


@pytest.mark.slow
def test_empirical_distribution_matches_stationary_long() -> None:
    params = SolitaireParams(12, 0.3, "1/2")
    counts = empirical_distribution(params, 2000000, seed=20190101)
    pi = stationary(build_kernel(params))
    assert total_variation(pi, counts) <= 0.02


def test_consumption_time() -> None:
    params = SolitaireParams(100, 0.2, "1/100")
    alpha0 = WeakComposition([20, 80])
    times = [consumption_time(alpha0, params, 1, 300, RngStream(seed)) for seed in range(200)]
    consumed = [t for t in times if t is not None]
    assert len(consumed) >= 198
    # one card per move at most
    assert min(consumed) >= 20


def test_consumption_time_edge_cases() -> None:
    params = SolitaireParams(10, 0.5, "1/2")
    alpha0 = WeakComposition([0, 10])
    assert consumption_time(alpha0, params, 1, 10, RngStream(0)) == 0
    assert consumption_time(alpha0, params, 5, 10, RngStream(0)) == 0
    assert consumption_time(WeakComposition([10]), SolitaireParams(10, 1e-12, "1/2"), 1, 5, RngStream(0)) is None
    with pytest.raises(ValueError):
        consumption_time(alpha0, params, 0, 10, RngStream(0))


@pytest.mark.slow
def test_exponential_trend() -> None:
    """With q = 1 and p = c ln(n)/n for (n, c) = (1e4, 10), (1e5, 50), (1e6, 250) the mean sup deviation decreases."""
    means = []
    for n, c in ((10**4, 10), (10**5, 50), (10**6, 250)):
        params = SolitaireParams(n, c * math.log(n) / n, "1/1")
        replicas = chain_replicas(triangular_start(n), params, list(range(20190101, 20190105)), window=20)
        means.append(float(np.mean([stats.mean_sup for stats in replicas])))
    assert means[0] > means[1] > means[2]


class TestRegimes:
    def test_from_json(self) -> None:
        spec = RegimeSpec.from_json([[1000, 0.5, "1/1"], {"n": 200, "p": 0.1, "q": "1/200"}])
        assert len(spec) == 2
        assert spec.points[1] == SolitaireParams(200, 0.1, "1/200")
        assert RegimeSpec.from_json([]).points == []

    @pytest.mark.parametrize(
        "data", [{"n": 1}, [[1000, 0.5]], [{"n": 10, "p": 0.5}], [[10, 0.5, "0.5"]], [[0, 0.5, "1/2"]]]
    )
    def test_from_json_raises_ValueError(self, data: object) -> None:
        with pytest.raises(ValueError):
            RegimeSpec.from_json(data)  # type: ignore

    @pytest.mark.parametrize(
        "sup_exp, sup_triangle, exp",
        [
            (0.02, 0.3, "exponential"),
            (0.3, 0.02, "triangle"),
            (0.2, 0.3, "intermediate"),
            (0.03, 0.035, "ambiguous"),
            (0.04, 0.2, "exponential"),
        ],
    )
    def test_classify_fit(self, sup_exp: float, sup_triangle: float, exp: str) -> None:
        assert classify_fit(sup_exp, sup_triangle, 0.05, 0.01) == exp

    def test_exponential_regime(self) -> None:
        # p q^2 n = 1000 and p q^2 n / ln n > 100
        row = regime_point(SolitaireParams(20000, 0.05, "1/1"), seed=20190101, epsilon=0.2)
        assert row.sup_exp < row.sup_triangle
        assert row.label == "exponential"
        assert row.pq2n == pytest.approx(1000.0)

    def test_scan(self) -> None:
        spec = RegimeSpec.from_json([[300, 0.5, "1/1"], [300, 0.2, "1/300"], [300, 0.3, "1/3"]])
        rows = regime_scan(spec, seed=7, moves=100, samples=3, threads=2)
        assert [row.params for row in rows] == spec.points
        assert all(row.label in ("exponential", "triangle", "ambiguous", "intermediate") for row in rows)
        again = regime_scan(spec, seed=7, moves=100, samples=3, threads=1)
        assert [row.as_tuple() for row in rows] == [row.as_tuple() for row in again]
        assert RegimeRow.FIELDS == SCHEMAS["regimes"]
        assert rows[0].as_tuple()[2] == "1/1"

    def test_scan_empty(self) -> None:
        assert regime_scan(RegimeSpec([]), seed=1) == []

    @pytest.mark.parametrize("samples", [0, -3])
    def test_point_without_samples_raises_ValueError(self, samples: int) -> None:
        with pytest.raises(ValueError):
            regime_point(SolitaireParams(300, 0.5, "1/1"), seed=7, moves=10, samples=samples)
        with pytest.raises(ValueError):
            regime_scan(RegimeSpec([]), seed=7, moves=10, samples=samples)

    def test_point_negative_moves_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            regime_point(SolitaireParams(300, 0.5, "1/1"), seed=7, moves=-1)

    def test_shape_argument(self) -> None:
        params = SolitaireParams(400, 0.3, "1/2")
        stats = run_chain(
            triangular_start(400),
            params,
            burn_in=50,
            window=5,
            seed=1,
            shape=LimitShape.triangle(),
            scaling="by-first-part",
        )
        assert stats.to_json()["shape"] == "triangle"
        assert stats.to_json()["scaling"] == "by_first_part"
        assert isinstance(stats.snapshots[0], Partition)
