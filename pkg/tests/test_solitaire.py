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

""" Tests for code in `bulsol.solitaire`. """

from fractions import Fraction
from typing import List

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bulsol.partitions import Partition, WeakComposition
from bulsol.rng import RngStream
from bulsol.solitaire import (
    SigmaKind,
    SigmaRule,
    SolitaireParams,
    candidates,
    classic_params,
    parse_rational,
    play,
    random_move,
    rounding_total,
    step_deterministic,
    step_random,
    triangular_start,
)
from bulsol.utils import CapacityError

compositions = st.lists(st.integers(min_value=0, max_value=40), min_size=1, max_size=20).filter(lambda v: sum(v) > 0)
proportions = st.fractions(min_value=Fraction(1, 50), max_value=1).filter(lambda q: q > 0)


class TestParseRational:
    @pytest.mark.parametrize("s, exp", [("3/10", Fraction(3, 10)), (" 1 / 1 ", Fraction(1)), ("2/4", Fraction(1, 2))])
    def test_parse_rational(self, s: str, exp: Fraction) -> None:
        assert parse_rational(s) == exp

    @pytest.mark.parametrize("s", ["0.3", "1", "0/5", "3/2", "1/0", "-1/2", "a/b", ""])
    def test_parse_rational_raises_ValueError(self, s: str) -> None:
        with pytest.raises(ValueError):
            parse_rational(s)


class TestSolitaireParams:
    def test_init(self) -> None:
        params = SolitaireParams(100, 0.25, "1/10")
        assert params.q == Fraction(1, 10)
        assert params.pqn == pytest.approx(2.5)
        assert params.regime_value == pytest.approx(0.25)
        assert params.to_json() == {"n": 100, "p": 0.25, "q": "1/10"}
        assert repr(params) == "SolitaireParams(n=100, p=0.25, q=1/10)"
        assert params == SolitaireParams(100, 0.25, Fraction(1, 10))

    @pytest.mark.parametrize(
        "n, p, q",
        [(0, 0.5, "1/2"), (-3, 0.5, "1/2"), (10, 0.0, "1/2"), (10, 1.5, "1/2"), (10, 0.5, 0), (10, 0.5, "3/2")],
    )
    def test_init_raises_ValueError(self, n: int, p: float, q: object) -> None:
        with pytest.raises(ValueError):
            SolitaireParams(n, p, q)  # type: ignore

    def test_classic(self) -> None:
        assert classic_params(5, 0.5).q == Fraction(1, 5)
        assert SolitaireParams.classic(7, 0.1) == SolitaireParams(7, 0.1, "1/7")


class TestCandidates:
    @pytest.mark.parametrize(
        "h, q, exp",
        [
            (6, Fraction(3, 10), 2),
            (1, Fraction(1, 1000), 1),
            (1, Fraction(1), 1),
            (10, Fraction(1, 10), 1),
            (11, Fraction(1, 10), 2),
            (0, Fraction(1, 2), 0),
            (7, Fraction(1), 7),
        ],
    )
    def test_candidates(self, h: int, q: Fraction, exp: int) -> None:
        assert candidates(h, q) == exp

    @given(st.integers(min_value=1, max_value=10**6), proportions)
    def test_range(self, h: int, q: Fraction) -> None:
        assert 1 <= candidates(h, q) <= h

    def test_small_q_picks_one(self) -> None:
        q = Fraction(1, 50)
        assert all(candidates(h, q) == 1 for h in range(1, 51))


class TestSigmaRule:
    def test_classic(self) -> None:
        rule = SigmaRule.classic()
        assert rule.kind == SigmaKind.CLASSIC
        assert [rule(h) for h in (0, 1, 5)] == [0, 1, 1]

    def test_proportion(self) -> None:
        rule = SigmaRule.proportion("3/10")
        assert [rule(h) for h in (0, 6, 2, 2, 1)] == [0, 2, 1, 1, 1]

    def test_proportion_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            SigmaRule(SigmaKind.PROPORTION)
        with pytest.raises(ValueError):
            SigmaRule.proportion("0/1")

    @given(proportions, st.integers(min_value=1, max_value=200))
    def test_well_behaved(self, q: Fraction, n: int) -> None:
        assert SigmaRule.proportion(q).is_well_behaved(n)
        assert SigmaRule.classic().is_well_behaved(n)


class TestStepDeterministic:
    @pytest.mark.parametrize(
        "alpha, rule, exp",
        [
            ([2, 1, 1], SigmaRule.classic(), [3, 1]),
            ([6, 2, 2, 1], SigmaRule.proportion("3/10"), [5, 4, 1, 1]),
            ([1], SigmaRule.classic(), [1]),
            ([3, 0, 2], SigmaRule.classic(), [2, 2, 0, 1]),
            ([4], SigmaRule.proportion("1/1"), [4]),
        ],
    )
    def test_step(self, alpha: List[int], rule: SigmaRule, exp: List[int]) -> None:
        assert step_deterministic(WeakComposition(alpha), rule) == WeakComposition(exp)

    def test_ord(self) -> None:
        assert step_deterministic(WeakComposition([2, 1, 1]), SigmaRule.classic()).ord() == Partition([3, 1])


class TestStepRandom:
    @given(compositions, proportions, st.integers(min_value=0, max_value=2**32))
    def test_conservation_and_domination(self, parts: List[int], q: Fraction, seed: int) -> None:
        alpha = WeakComposition(parts)
        params = SolitaireParams(alpha.n, 0.4, q)
        result, outcome = step_random(alpha, params, RngStream(seed))
        assert result.n == alpha.n
        assert result.part(1) == outcome.new_pile == sum(outcome.picked_per_pile)
        for i, h in enumerate(alpha.parts, start=1):
            picked = outcome.picked_per_pile[i - 1]
            assert 0 <= picked <= candidates(h, q)
            assert 0 <= result.part(i + 1) == h - picked <= h
        assert outcome.kappa == sum(candidates(h, q) for h in alpha.parts)
        assert outcome.rounding_total == rounding_total(alpha, q)
        assert outcome.rounding_total < alpha.num_piles

    @settings(max_examples=50)
    @given(compositions, proportions)
    def test_p_one_is_deterministic(self, parts: List[int], q: Fraction) -> None:
        alpha = WeakComposition(parts)
        result, _ = step_random(alpha, SolitaireParams(alpha.n, 1.0, q), RngStream(1))
        assert result == step_deterministic(alpha, SigmaRule.proportion(q))

    def test_p_one_small_q_is_classic(self) -> None:
        alpha = WeakComposition([5, 3, 3, 1])
        result, _ = step_random(alpha, SolitaireParams(12, 1.0, "1/12"), RngStream(1))
        assert result == step_deterministic(alpha, SigmaRule.classic())

    def test_empty_new_pile_is_kept(self) -> None:
        alpha = WeakComposition([3, 2])
        params = SolitaireParams(5, 1e-12, "1/1")
        result, outcome = step_random(alpha, params, RngStream(0))
        assert outcome.new_pile == 0
        assert result.parts == (0, 3, 2)

    def test_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            step_random(WeakComposition([3]), SolitaireParams(4, 0.5, "1/2"), RngStream(0))

    def test_two_card_frequency(self) -> None:
        params = SolitaireParams(2, 0.5, "1/2")
        rng = RngStream(20190101)
        draws = 100000
        split = sum(step_random(WeakComposition([2]), params, rng)[0].ord() == Partition([1, 1]) for _ in range(draws))
        sigma = np.sqrt(draws * 0.25)
        assert abs(split - draws * 0.5) < 3 * sigma

    def test_random_move_arrays(self) -> None:
        parts = np.array([4, 0, 3], dtype=np.int64)
        result, picked, kappa = random_move(parts, Fraction(1, 2), 1.0, np.random.default_rng(0))
        assert kappa == 4
        assert picked.tolist() == [2, 0, 2]
        assert result.tolist() == [4, 2, 0, 1]


class TestTriangularStart:
    @pytest.mark.parametrize(
        "n, exp",
        [(1, [1]), (2, [2]), (3, [2, 1]), (10, [4, 3, 2, 1]), (11, [5, 3, 2, 1]), (14, [8, 3, 2, 1])],
    )
    def test_triangular_start(self, n: int, exp: List[int]) -> None:
        assert triangular_start(n) == Partition(exp)

    def test_large(self) -> None:
        lam = triangular_start(100000)
        assert lam.n == 100000
        assert lam.num_piles == 446
        assert lam.part(1) == 446 + 319

    def test_raises_ValueError(self) -> None:
        with pytest.raises(ValueError):
            triangular_start(0)


class TestPlay:
    def test_zero_moves(self) -> None:
        alpha = WeakComposition([3, 1])
        traj = play(alpha, SolitaireParams(4, 0.5, "1/2"), 0, RngStream(0))
        assert traj.final == alpha
        assert traj.snapshots == [(0, alpha)]

    def test_classic_cycle(self) -> None:
        traj = play(WeakComposition([3, 1]), SolitaireParams(4, 1.0, 1), 3, sigma=SigmaRule.classic(), snapshot_every=1)
        assert [str(state.ord()) for _, state in traj.snapshots] == ["3+1", "2+2", "2+1+1", "3+1"]
        assert all(state.n == 4 for _, state in traj.snapshots)

    def test_snapshot_stride(self) -> None:
        params = SolitaireParams(10, 0.5, "1/2")
        traj = play(triangular_start(10), params, 7, RngStream(0), snapshot_every=3)
        assert [t for t, _ in traj.snapshots] == [0, 3, 6, 7]

    def test_reproducible(self) -> None:
        params = SolitaireParams(500, 0.2, "1/3")
        a = play(triangular_start(500), params, 300, RngStream(9, 2), record_outcomes=True)
        b = play(triangular_start(500), params, 300, RngStream(9, 2), record_outcomes=True)
        assert a.final == b.final
        assert [o.new_pile for o in a.outcomes] == [o.new_pile for o in b.outcomes]
        assert len(a.outcomes) == 300

    def test_raises_CapacityError(self) -> None:
        with pytest.raises(CapacityError):
            play(
                WeakComposition([3, 1]),
                SolitaireParams(4, 0.5, "1/2"),
                10,
                RngStream(0),
                snapshot_every=1,
                snapshot_budget=5,
            )

    @pytest.mark.parametrize("moves, stride", [(-1, None), (3, 0)])
    def test_raises_ValueError(self, moves: int, stride: int) -> None:
        with pytest.raises(ValueError):
            play(WeakComposition([3, 1]), SolitaireParams(4, 0.5, "1/2"), moves, RngStream(0), snapshot_every=stride)

    def test_triangular_start_200_moves(self) -> None:
        params = SolitaireParams(100000, 0.01, "1/1")
        traj = play(triangular_start(100000), params, 200, RngStream(20190101))
        assert traj.final.n == 100000
        assert traj.final.part(1) > 0
