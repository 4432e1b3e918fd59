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

""" Tests for code in `bulsol.threshold`. """

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bulsol.threshold import (
    BernoulliMatrix,
    DimensionError,
    check_domination,
    chernoff_bound,
    chernoff_table,
    chunk_deviation,
    decay_trace,
    domination_hypotheses,
    exact_two_sided_tail,
    exhaustive_case,
    exhaustive_domination,
    expected_decay,
    run_qprocess,
    run_threshold,
    run_union,
    survival_goodness_of_fit,
    threshold_cutoff,
    threshold_survival_sample,
)

FRACTIONS = st.sampled_from([Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4), Fraction(1)])


@pytest.mark.parametrize(
    "a1, s, exp", [(4, "1/2", 2), (5, "1/2", 3), (8, 0, 0), (7, 1, 7), (10, Fraction(1, 3), 4), (1, "1/4", 1)]
)
def test_threshold_cutoff(a1: int, s: object, exp: int) -> None:
    assert threshold_cutoff(a1, s) == exp  # type: ignore


class TestBernoulliMatrix:
    def test_from_seed(self) -> None:
        X = BernoulliMatrix.from_seed(42, 20, 5, 0.3)
        assert X.shape == (20, 5)
        assert X.p == 0.3
        assert np.array_equal(X.values, BernoulliMatrix.from_seed(42, 20, 5, 0.3).values)
        # entries are pure functions of (seed, i, k)
        assert np.array_equal(BernoulliMatrix.from_seed(42, 8, 3, 0.3).values, X.values[:8, :3])

    @pytest.mark.parametrize("p, exp", [(0.0, False), (1.0, True)])
    def test_from_seed_extremes(self, p: float, exp: bool) -> None:
        X = BernoulliMatrix.from_seed(0, 6, 4, p)
        assert bool(np.all(X.values == exp))

    def test_from_seed_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            BernoulliMatrix.from_seed(0, 2, 2, 1.5)

    def test_from_bits(self) -> None:
        X = BernoulliMatrix.from_bits(0b100101, 2, 3)
        assert X.values.tolist() == [[True, False, True], [False, False, True]]
        assert X[1, 1] and X[2, 3] and not X[2, 1]
        assert X.column(3).tolist() == [True, True]
        assert X.p is None

    def test_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            BernoulliMatrix(np.zeros(3, dtype=bool))

    def test_check_dimensions(self) -> None:
        X = BernoulliMatrix.from_seed(0, 3, 2, 0.5)
        X.check_dimensions(3, 2)
        with pytest.raises(DimensionError):
            X.check_dimensions(4, 2)
        with pytest.raises(DimensionError):
            run_threshold(3, "1/2", 0.5, 3, X)
        with pytest.raises(ValueError):
            run_qprocess(4, "1/2", 0.5, 2, X)


class TestProcesses:
    def test_threshold_all_removed(self) -> None:
        state = run_threshold(4, "1/2", 1.0, 2, BernoulliMatrix.from_seed(0, 4, 2, 1.0))
        assert state.sizes == (4, 2, 2)
        assert state.cutoff == 2 and state.b == 0
        assert state.remaining.tolist() == [False, False, True, True]
        assert state.integral_threshold

    def test_qprocess_all_removed(self) -> None:
        state = run_qprocess(4, "1/2", 1.0, 2, BernoulliMatrix.from_seed(0, 4, 2, 1.0))
        assert state.sizes == (4, 2, 1)
        assert state.remaining.tolist() == [False, False, False, True]

    def test_no_removals(self) -> None:
        X = BernoulliMatrix.from_bits(0, 5, 3)
        assert run_threshold(5, "1/2", None, 3, X).sizes == (5, 5, 5, 5)
        assert run_qprocess(5, "1/2", None, 3, X).sizes == (5, 5, 5, 5)

    def test_threshold_zero(self) -> None:
        X = BernoulliMatrix.from_seed(3, 6, 3, 1.0)
        state = run_threshold(6, 0, 1.0, 3, X)
        assert state.sizes == (6, 6, 6, 6)
        assert state.b == 0

    def test_not_integral(self) -> None:
        state = run_threshold(5, "1/2", 0.5, 2, BernoulliMatrix.from_seed(9, 5, 2, 0.5))
        assert state.cutoff == 3
        assert not state.integral_threshold
        assert state.sizes[-1] == 5 - 3 + state.b

    def test_qprocess_removes_top_cards(self) -> None:
        # label 1 of the first move is 1, label 3 of the second move is 1
        X = BernoulliMatrix(np.array([[True, False], [False, False], [False, True], [False, False]]))
        state = run_qprocess(4, "1/2", None, 2, X)
        assert state.sizes == (4, 3, 2)
        assert state.remaining.tolist() == [False, True, False, True]

    @pytest.mark.parametrize("kwargs", [{"a1": 0}, {"r": 0}, {"p": 0.7}])
    def test_raises_ValueError(self, kwargs: dict) -> None:
        args = dict({"a1": 4, "r": 2, "p": 0.5}, **kwargs)
        X = BernoulliMatrix.from_seed(0, 4, 2, 0.5)
        with pytest.raises(ValueError):
            run_threshold(args["a1"], "1/2", args["p"], args["r"], X)
        with pytest.raises(ValueError):
            run_qprocess(args["a1"], "1/2", args["p"], args["r"], X)

    @pytest.mark.parametrize("s", ["3/2", "-1/2"])
    def test_threshold_raises_ValueError(self, s: str) -> None:
        with pytest.raises(ValueError):
            run_threshold(4, s, None, 1, BernoulliMatrix.from_bits(0, 4, 1))

    @given(
        a1=st.integers(min_value=1, max_value=12),
        r=st.integers(min_value=1, max_value=5),
        s=FRACTIONS,
        q=FRACTIONS,
        seed=st.integers(min_value=0, max_value=2**32),
    )
    @settings(max_examples=200, deadline=None)
    def test_monotone(self, a1: int, r: int, s: Fraction, q: Fraction, seed: int) -> None:
        X = BernoulliMatrix.from_seed(seed, a1, r, 0.5)
        for sizes in (run_threshold(a1, s, 0.5, r, X).sizes, run_qprocess(a1, q, 0.5, r, X).sizes):
            assert len(sizes) == r + 1
            assert all(b <= a for a, b in zip(sizes, sizes[1:]))


class TestDomination:
    @pytest.mark.parametrize(
        "a1, q, s, final, exp",
        [
            (4, Fraction(1, 2), Fraction(1, 2), 2, (True, False)),
            (4, Fraction(1, 4), Fraction(1, 2), 4, (False, True)),
            (8, Fraction(1, 4), Fraction(1, 4), 8, (True, True)),
        ],
    )
    def test_hypotheses(self, a1: int, q: Fraction, s: Fraction, final: int, exp: tuple) -> None:
        assert domination_hypotheses(a1, q, s, final) == exp

    @given(
        a1=st.integers(min_value=1, max_value=16),
        r=st.integers(min_value=1, max_value=6),
        s=FRACTIONS,
        q=FRACTIONS,
        p=st.floats(min_value=0.05, max_value=1.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_no_violations(self, a1: int, r: int, s: Fraction, q: Fraction, p: float) -> None:
        case = check_domination(a1, q, s, p, r, range(20))
        assert case.matrices == 20
        assert case.violations == 0
        assert case.violating_seeds == []

    @pytest.mark.parametrize("a1, r, s, q", [(3, 2, "1/2", "1/4"), (4, 2, "1/4", "1/2"), (2, 3, "1/1", "3/4")])
    def test_exhaustive_case_counts(self, a1: int, r: int, s: str, q: str) -> None:
        case = exhaustive_case(a1, r, s, q)
        hyp_ii = viol = 0
        for bits in range(2 ** (a1 * r)):
            X = BernoulliMatrix.from_bits(bits, a1, r)
            upper = run_threshold(a1, s, None, r, X).sizes
            lower = run_qprocess(a1, q, None, r, X).sizes
            hyp = domination_hypotheses(a1, Fraction(q), Fraction(s), upper[-1])
            if hyp[0] and any(u < v for u, v in zip(upper, lower)):
                viol += 1
            if hyp[1]:
                hyp_ii += 1
                if any(u > v for u, v in zip(upper, lower)):
                    viol += 1
        assert case.exhaustive
        assert case.matrices == 2 ** (a1 * r)
        assert case.hypothesis_ii == hyp_ii
        assert case.violations == viol == 0

    def test_exhaustive_small_grid(self) -> None:
        cases = exhaustive_domination(4, 2, threads=2)
        assert len(cases) == 4 * 2 * 4 * 4
        assert all(case.exhaustive for case in cases)
        assert [(case.a1, case.r) for case in cases[:17]] == [(1, 1)] * 16 + [(1, 2)]
        assert sum(case.violations for case in cases) == 0
        assert 0.0 <= min(case.hypothesis_ii_frequency for case in cases)
        assert max(case.hypothesis_ii_frequency for case in cases) <= 1.0

    def test_sampled_fallback(self) -> None:
        cases = exhaustive_domination(3, 3, s_grid=["1/2"], q_grid=["1/2"], max_bits=4, samples=50)
        sampled = [case for case in cases if not case.exhaustive]
        assert sampled and all(case.matrices == 50 for case in sampled)
        assert all(case.a1 * case.r > 4 for case in sampled)
        assert sum(case.violations for case in cases) == 0
        assert set(cases[0].to_json()) >= {"a1", "r", "s", "q", "matrices", "exhaustive"}

    @pytest.mark.slow
    def test_exhaustive_full_grid(self) -> None:
        cases = exhaustive_domination(8, 4)
        assert len(cases) == 512
        assert all(case.exhaustive for case in cases)
        assert sum(case.violations for case in cases) == 0


class TestUnion:
    def test_all_removed(self) -> None:
        union = run_union([4, 4], 2, "1/2", 1.0, 0)
        assert [union.u(k) for k in range(1, len(union) + 1)] == [4, 2, 2, 4, 2, 2]
        assert union.gammas == (4, 4)

    def test_clamped(self) -> None:
        union = run_union([4], 2, "3/2", 1.0, 0)
        assert union.s == 1
        assert union.sizes.tolist() == [4, 0, 0]

    def test_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            run_union([], 2, "1/2", 0.5, 0)

    def test_reproducible(self) -> None:
        a = run_union([100, 80, 60], 5, "1/2", 0.2, 7)
        b = run_union([100, 80, 60], 5, "1/2", 0.2, 7)
        assert np.array_equal(a.sizes, b.sizes)
        assert len(a) == 18

    def test_decay_trace(self) -> None:
        union = run_union([1000, 800], 10, "1/2", 0.01, 1)
        rows = decay_trace(union, 0.01, 1)
        assert rows[0] == (1, 1000, 1000.0)
        assert [row[0] for row in rows] == list(range(1, 23))
        assert rows[5][2] == pytest.approx(1000 * 0.99**5)

    @pytest.mark.parametrize("num_seeds", [100, pytest.param(1000, marks=pytest.mark.slow)])
    def test_tracks_exponential_decay(self, num_seeds: int) -> None:
        # p = 0.01, q = 1, r = 24 as in the schedule of n = 1e5; s = q (1 + 2pr) is clamped to 1
        p, r = 0.01, 24
        gammas = [math.ceil(1000 * (1 - p) ** (j * (r + 1))) for j in range(3)]
        exp = np.array([expected_decay(1000, p, 1, k - 1) for k in range(1, 3 * (r + 1) + 1)])
        tracked = 0
        for seed in range(num_seeds):
            union = run_union(gammas, r, "1/1", p, seed)
            assert len(union) == 3 * (r + 1)
            assert union.u(r + 2) == gammas[1]
            tracked += bool(np.all(np.abs(union.sizes - exp) <= 0.15 * exp))
        assert tracked >= 0.95 * num_seeds

    @pytest.mark.parametrize(
        "a1, p, q, k, exp", [(1000, 0.01, 1, 100, 366.032), (10, 0.5, "1/2", 0, 10.0), (8, 1.0, "1/2", 1, 4.0)]
    )
    def test_expected_decay(self, a1: float, p: float, q: object, k: int, exp: float) -> None:
        assert expected_decay(a1, p, q, k) == pytest.approx(exp, abs=1e-3)  # type: ignore

    def test_expected_decay_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            expected_decay(10, 0.5, 1, -1)


class TestSurvival:
    def test_matches_threshold_process(self) -> None:
        seeds = list(range(50))
        sample = threshold_survival_sample(20, "1/2", 0.2, 3, seeds, chunk_size=7)
        exp = [run_threshold(20, "1/2", 0.2, 3, BernoulliMatrix.from_seed(seed, 20, 3, 0.2)).b for seed in seeds]
        assert sample.tolist() == exp

    def test_zero_cutoff(self) -> None:
        assert threshold_survival_sample(10, 0, 0.5, 2, [1, 2, 3]).tolist() == [0, 0, 0]

    def test_goodness_of_fit(self) -> None:
        sample = threshold_survival_sample(100, "1/2", 0.1, 10, range(10000))
        assert sample.max() <= 50
        _, pvalue = survival_goodness_of_fit(sample, 100, "1/2", 0.1, 10)
        assert pvalue > 0.001

    @pytest.mark.slow
    def test_goodness_of_fit_long(self) -> None:
        sample = threshold_survival_sample(100, "1/2", 0.1, 10, range(100000))
        _, pvalue = survival_goodness_of_fit(sample, 100, "1/2", 0.1, 10)
        assert pvalue > 0.001

    def test_goodness_of_fit_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            survival_goodness_of_fit(np.array([0, 1]), 4, "1/2", 0.5, 1)

    @pytest.mark.parametrize("f, s, integral", [(1000, "1/2", True), (1000, "1/3", False)])
    def test_chunk_deviation(self, f: int, s: str, integral: bool) -> None:
        result = chunk_deviation(f, s, 0.01, 1, 20, range(200), 100000, 0.05)
        assert result.integral_threshold is integral
        assert result.reference == pytest.approx(0.05 * 0.01**2 * 100000 * 20)
        assert len(result.samples) == 200
        assert 0.0 <= result.fraction_exceeding <= 1.0
        assert result.to_json()["max"] >= result.to_json()["mean"] >= 0.0


class TestChernoff:
    def test_bound(self) -> None:
        assert chernoff_bound(100, 0.5, 25) == pytest.approx(0.031008, abs=1e-6)
        assert exact_two_sided_tail(100, 0.5, 25) < 1e-6

    @pytest.mark.parametrize("gamma", [0, -1, 50, 60])
    def test_bound_raises_ValueError(self, gamma: float) -> None:
        with pytest.raises(ValueError):
            chernoff_bound(100, 0.5, gamma)

    def test_exact_tail_whole_mass(self) -> None:
        assert exact_two_sided_tail(10, 0.3, 0) == pytest.approx(1.0)

    @pytest.mark.parametrize("m, p", [(100, 0.5), (1000, 0.3), (50, 0.9), (10000, 0.01)])
    def test_table(self, m: int, p: float) -> None:
        rows = chernoff_table(m, p)
        assert len(rows) == 19
        assert [g for g, _, _ in rows] == pytest.approx([m * p * j / 20 for j in range(1, 20)])
        for _, tail, bound in rows:
            assert tail <= bound
        tails = [tail for _, tail, _ in rows]
        assert all(b <= a for a, b in zip(tails, tails[1:]))

    def test_table_gammas(self) -> None:
        rows = chernoff_table(100, 0.5, [10, 20])
        assert [row[0] for row in rows] == [10.0, 20.0]
