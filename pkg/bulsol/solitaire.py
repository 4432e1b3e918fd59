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

""" Moves of the deterministic :math:`\\sigma`-solitaire and of the p-random q-proportion solitaire
:math:`\\mathscr{B}(n,p,q)` on weak compositions.

In every move each non-empty pile of size ``h`` offers :math:`\\lceil q h \\rceil` candidate cards, each of
which is picked with probability ``p``; the picked cards form a new (possibly empty) pile which is put in a
new bowl to the left of all old bowls.
"""

from __future__ import annotations

import enum
import logging
import math
import re
from fractions import Fraction
from typing import Final, List, Optional, Tuple, Union

import numpy as np

from .partitions import Partition, WeakComposition
from .rng import RngStream
from .settings import Settings
from .utils import CapacityError, InvariantViolation, ceil_div

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants
# ------------------------------------------------------------------------------------------------------------------- #

RATIONAL_PATTERN: Final = r"^\s*(\d+)\s*/\s*(\d+)\s*$"  # e.g. '3/10'


# ------------------------------------------------------------------------------------------------------------------- #
# Parameters
# ------------------------------------------------------------------------------------------------------------------- #


def parse_rational(s: str) -> Fraction:
    """Parse a proportion given as ``'num/den'`` and check that it lies in :math:`(0, 1]`.

    :param s: The string representation, e.g. ``'3/10'``.
    :type s: str
    :returns: The exact rational value.
    :rtype: ``Fraction``
    :raises ValueError:
        Will be raised for a malformed string or a value outside :math:`(0, 1]`.

    >>> parse_rational("3/10")
    Fraction(3, 10)
    """
    m = re.match(RATIONAL_PATTERN, s)
    if not m:
        raise ValueError("q must be given as 'num/den' ({!r})".format(s))
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0 or num == 0 or num > den:
        raise ValueError("q must be in (0,1] ({!r})".format(s))
    return Fraction(num, den)


class SolitaireParams:
    """The parameters ``(n, p, q)`` of the chain :math:`\\mathscr{B}(n,p,q)`.

    :param n: The number of cards (``n >= 1``).
    :type n: int
    :param p: The pick probability of a candidate card, :math:`0 < p \\le 1`.
    :type p: float
    :param q: The exact candidate proportion, :math:`0 < q \\le 1`.
    :type q: Fraction, int or str (``'num/den'``)
    :raises ValueError:
        Will be raised for parameters out of range.
    """

    __slots__ = ("n", "p", "q")

    def __init__(self, n: int, p: float, q: Union[Fraction, int, str]) -> None:
        if isinstance(q, str):
            q = parse_rational(q)
        q = Fraction(q)
        if int(n) != n or n < 1:
            raise ValueError("number of cards must be a positive integer ({!r})".format(n))
        if not (0 < p <= 1):
            raise ValueError("p must be in (0,1] ({!r})".format(p))
        if not (0 < q <= 1):
            raise ValueError("q must be in (0,1] ({!r})".format(q))
        self.n = int(n)
        self.p = float(p)
        self.q = q

    @classmethod
    def classic(cls, n: int, p: float) -> SolitaireParams:
        """Parameters of the classical p-random solitaire (a single candidate card per pile, ``q = 1/n``)."""
        return cls(n, p, Fraction(1, n))

    @property
    def pqn(self) -> float:
        """The expected size :math:`p q n` of a new pile."""
        return self.p * float(self.q) * self.n

    @property
    def regime_value(self) -> float:
        """The regime classification value :math:`p q^2 n`."""
        return self.p * float(self.q) ** 2 * self.n

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "q": "{}/{}".format(self.q.numerator, self.q.denominator)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SolitaireParams) and (self.n, self.p, self.q) == (other.n, other.p, other.q)

    def __hash__(self) -> int:
        return hash((self.n, self.p, self.q))

    def __repr__(self) -> str:
        return "SolitaireParams(n={:d}, p={!r}, q={}/{})".format(self.n, self.p, self.q.numerator, self.q.denominator)


# ------------------------------------------------------------------------------------------------------------------- #
# Pick rules
# ------------------------------------------------------------------------------------------------------------------- #


def classic_params(n: int, p: float) -> SolitaireParams:
    """Return the parameters of the p-random solitaire with a single candidate card per pile (``q = 1/n``).

    >>> classic_params(5, 0.5)
    SolitaireParams(n=5, p=0.5, q=1/5)
    """
    return SolitaireParams.classic(n, p)


def candidates(h: int, q: Fraction) -> int:
    """Return the number :math:`\\lceil q h \\rceil` of candidate cards of a pile of size ``h`` (exact).

    >>> candidates(6, Fraction(3, 10)), candidates(10, Fraction(1, 10)), candidates(0, Fraction(1, 2))
    (2, 1, 0)
    """
    if h < 0:
        raise ValueError("pile size must be non-negative ({!r})".format(h))
    return ceil_div(q.numerator * h, q.denominator)


@enum.unique
class SigmaKind(enum.Enum):
    """Supported pick rules :math:`\\sigma(h)` of the deterministic solitaire:

    * ``CLASSIC``     :math:`\\sigma(h) = 1` for :math:`h \\ge 1` (ordinary Bulgarian solitaire).
    * ``PROPORTION``  :math:`\\sigma(h) = \\lceil q h \\rceil`.
    """

    CLASSIC = 1
    PROPORTION = 2


class SigmaRule:
    """A pick rule :math:`\\sigma` with :math:`\\sigma(0) = 0`.

    :param kind: The kind of the rule, see :class:`SigmaKind`.
    :type kind: SigmaKind
    :param q: The proportion of a ``PROPORTION`` rule.
    :type q: Fraction or None

    >>> rule = SigmaRule.proportion(Fraction(3, 10))
    >>> [rule(h) for h in (6, 2, 2, 1)]
    [2, 1, 1, 1]
    """

    def __init__(self, kind: SigmaKind, q: Optional[Fraction] = None) -> None:
        if kind is SigmaKind.PROPORTION and (q is None or not 0 < q <= 1):
            raise ValueError("proportion rule requires q in (0,1] ({!r})".format(q))
        self.kind = kind
        self.q = q

    @classmethod
    def classic(cls) -> SigmaRule:
        return cls(SigmaKind.CLASSIC)

    @classmethod
    def proportion(cls, q: Union[Fraction, str]) -> SigmaRule:
        return cls(SigmaKind.PROPORTION, parse_rational(q) if isinstance(q, str) else Fraction(q))

    def __call__(self, h: int) -> int:
        if h <= 0:
            return 0
        if self.kind is SigmaKind.CLASSIC:
            return 1
        assert self.q is not None
        return candidates(h, self.q)

    def is_well_behaved(self, n: int) -> bool:
        """Check :math:`\\sigma(1) = 1` and that :math:`\\sigma(h)` and :math:`h - \\sigma(h)` are weakly
        non-decreasing for ``h = 1..n`` (exact integer arithmetic).
        """
        values = [self(h) for h in range(1, n + 1)]
        if values and values[0] != 1:
            return False
        return all(
            b >= a and (h + 1 - b) >= (h - a) for h, (a, b) in enumerate(zip(values, values[1:]), start=1)
        )

    def __repr__(self) -> str:
        return "SigmaRule({}{})".format(self.kind.name, "" if self.q is None else ", q={}".format(self.q))


# ------------------------------------------------------------------------------------------------------------------- #
# Moves
# ------------------------------------------------------------------------------------------------------------------- #


class MoveOutcome:
    """Details of a single random move.

    :param picked_per_pile: The number of picked cards per stored bowl (creation-time order).
    :param kappa: The total number :math:`\\kappa` of candidate cards.
    :param new_pile: The size of the new pile (the total number of picked cards).
    :param rounding_total: The total rounding effect :math:`R = \\kappa - q n` (exact).
    """

    __slots__ = ("picked_per_pile", "kappa", "new_pile", "rounding_total")

    def __init__(self, picked_per_pile: Tuple[int, ...], kappa: int, new_pile: int, rounding_total: Fraction) -> None:
        self.picked_per_pile = picked_per_pile
        self.kappa = kappa
        self.new_pile = new_pile
        self.rounding_total = rounding_total

    def __repr__(self) -> str:
        return "MoveOutcome(new_pile={:d}, kappa={:d}, R={})".format(self.new_pile, self.kappa, self.rounding_total)


def rounding_total(alpha: WeakComposition, q: Fraction) -> Fraction:
    """Return the total rounding effect :math:`R = \\kappa - q n_{alive}` of a configuration (exact).

    >>> rounding_total(WeakComposition([6, 2, 2, 1]), Fraction(3, 10))
    Fraction(17, 10)
    """
    kappa = sum(candidates(h, q) for h in alpha.parts)
    return kappa - q * alpha.n


def _check_conservation(before: int, after: int) -> None:
    if before != after:
        raise InvariantViolation(
            "card conservation violated: {:d} cards before, {:d} after the move".format(before, after)
        )


def _with_new_pile(new_pile: int, rest: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(rest)
    tail = rest[: nonzero[-1] + 1] if len(nonzero) else rest[:0]
    return np.concatenate((np.array([new_pile], dtype=np.int64), tail))


def random_move(
    parts: np.ndarray, q: Fraction, p: float, generator: np.random.Generator
) -> Tuple[np.ndarray, np.ndarray, int]:
    """Perform one random move on the bowl array ``parts`` (creation-time order, no trailing zeros).

    The binomial draws are made left to right over the bowls in creation-time order (empty bowls draw
    ``Bin(0, p) = 0``).

    :returns: The new bowl array, the picked cards per old bowl and the number of candidate cards.
    :rtype: ``tuple`` ( numpy.ndarray, numpy.ndarray, int )
    """
    cand = (q.numerator * parts + (q.denominator - 1)) // q.denominator
    picked = generator.binomial(cand, p) if p < 1 else cand
    new_pile = int(picked.sum())
    result = _with_new_pile(new_pile, parts - picked)
    if __debug__:
        _check_conservation(int(parts.sum()), int(result.sum()))
    return result, picked, int(cand.sum())


def step_deterministic(alpha: WeakComposition, sigma: SigmaRule) -> WeakComposition:
    """Perform one move of the deterministic :math:`\\sigma`-solitaire.

    Every non-empty pile ``i`` loses :math:`\\sigma(\\alpha_i)` cards which form a new pile at index 1.

    :param alpha: The current configuration.
    :type alpha: WeakComposition
    :param sigma: The pick rule.
    :type sigma: SigmaRule
    :returns: The next configuration.
    :rtype: ``WeakComposition``

    >>> step_deterministic(WeakComposition([2, 1, 1]), SigmaRule.classic())
    WeakComposition([3, 1])
    >>> step_deterministic(WeakComposition([6, 2, 2, 1]), SigmaRule.proportion("3/10"))
    WeakComposition([5, 4, 1, 1])
    """
    picked = [sigma(h) for h in alpha.parts]
    result = WeakComposition([sum(picked)] + [h - x for h, x in zip(alpha.parts, picked)])
    if __debug__:
        _check_conservation(alpha.n, result.n)
    return result


def step_random(
    alpha: WeakComposition, params: SolitaireParams, rng: RngStream
) -> Tuple[WeakComposition, MoveOutcome]:
    """Perform one move of :math:`\\mathscr{B}(n,p,q)`.

    :param alpha: The current configuration of ``params.n`` cards.
    :type alpha: WeakComposition
    :param params: The parameters of the chain.
    :type params: SolitaireParams
    :param rng: The random stream (advanced by the move).
    :type rng: RngStream
    :returns: The next configuration and the details of the move.
    :rtype: ``tuple`` ( WeakComposition, MoveOutcome )
    :raises ValueError:
        Will be raised if the configuration does not hold ``params.n`` cards.
    """
    if alpha.n != params.n:
        raise ValueError("configuration holds {:d} cards, expected {:d}".format(alpha.n, params.n))
    parts = np.asarray(alpha.parts, dtype=np.int64)
    result, picked, kappa = random_move(parts, params.q, params.p, rng.generator)
    outcome = MoveOutcome(
        picked_per_pile=tuple(int(v) for v in picked),
        kappa=kappa,
        new_pile=int(result[0]),
        rounding_total=kappa - params.q * alpha.n,
    )
    return WeakComposition(result.tolist()), outcome


def triangular_start(n: int) -> Partition:
    """Return the staircase :math:`(K, K-1, \\dotsc, 1)` with the largest ``K`` such that :math:`K(K+1)/2 \\le n`,
    the remainder being added to the largest part.

    >>> triangular_start(10), triangular_start(11), triangular_start(1)
    (Partition([4, 3, 2, 1]), Partition([5, 3, 2, 1]), Partition([1]))
    """
    if n < 1:
        raise ValueError("number of cards must be positive ({!r})".format(n))
    k = (math.isqrt(8 * n + 1) - 1) // 2
    parts = list(range(k, 0, -1))
    parts[0] += n - k * (k + 1) // 2
    return Partition(parts)


# ------------------------------------------------------------------------------------------------------------------- #
# Trajectories
# ------------------------------------------------------------------------------------------------------------------- #


class Trajectory:
    """Result of :func:`play`: the final state and the sampled snapshots.

    :param final: The state after the last move.
    :param moves: The number of performed moves.
    :param snapshots: The recorded ``(move, state)`` pairs.
    :param outcomes: The recorded :class:`MoveOutcome` of every random move (if requested).
    """

    def __init__(
        self,
        final: WeakComposition,
        moves: int,
        snapshots: List[Tuple[int, WeakComposition]],
        outcomes: List[MoveOutcome],
    ) -> None:
        self.final = final
        self.moves = moves
        self.snapshots = snapshots
        self.outcomes = outcomes

    def __repr__(self) -> str:
        return "Trajectory(moves={:d}, snapshots={:d}, final={!r})".format(self.moves, len(self.snapshots), self.final)


def play(
    alpha0: Union[WeakComposition, Partition],
    params: SolitaireParams,
    moves: int,
    rng: Optional[RngStream] = None,
    sigma: Optional[SigmaRule] = None,
    snapshot_every: Optional[int] = None,
    record_outcomes: bool = False,
    snapshot_budget: Optional[int] = None,
) -> Trajectory:
    """Play ``moves`` moves starting from ``alpha0``.

    Without a random stream the deterministic solitaire with rule ``sigma`` (default: the proportion rule of
    ``params.q``) is played, otherwise the random solitaire :math:`\\mathscr{B}(n,p,q)`.

    :param alpha0: The initial configuration (a partition is taken as composition, largest pile newest).
    :param params: The parameters of the chain.
    :param moves: The number of moves ``T >= 0``.
    :param rng: The random stream (default :const:`None`, which means the deterministic game).
    :param sigma: The rule of the deterministic game.
    :param snapshot_every: Record every ``k``-th state (including the initial and the final one); default
        :const:`None` records the final state only.
    :param record_outcomes: Record the :class:`MoveOutcome` of every random move.
    :param snapshot_budget: The maximal number of stored snapshots (default: setting ``snapshot_budget``).
    :returns: The trajectory handle.
    :rtype: ``Trajectory``
    :raises ValueError:
        Will be raised for a negative number of moves or an invalid snapshot stride.
    :raises CapacityError:
        Will be raised if the snapshot policy would exceed the snapshot budget.

    >>> traj = play(WeakComposition([3, 1]), SolitaireParams(4, 1.0, 1), 3, sigma=SigmaRule.classic(),
    ...             snapshot_every=1)
    >>> [str(state) for _, state in traj.snapshots]
    ['3+1', '2+2', '2+1+1', '3+1']
    """
    if moves < 0:
        raise ValueError("number of moves must be non-negative ({!r})".format(moves))
    if snapshot_every is not None and snapshot_every < 1:
        raise ValueError("snapshot stride must be positive ({!r})".format(snapshot_every))
    alpha = WeakComposition(alpha0.parts) if isinstance(alpha0, Partition) else alpha0
    if alpha.n != params.n:
        raise ValueError("configuration holds {:d} cards, expected {:d}".format(alpha.n, params.n))
    budget = Settings["snapshot_budget"] if snapshot_budget is None else snapshot_budget
    if snapshot_every is not None:
        needed = moves // snapshot_every + 1 + (1 if moves % snapshot_every else 0)
        if needed > budget:
            raise CapacityError(
                "{:d} snapshots requested, the snapshot budget is {:d}".format(needed, budget), budget
            )
    rule = sigma if sigma is not None else SigmaRule.proportion(params.q)
    snapshots: List[Tuple[int, WeakComposition]] = []
    outcomes: List[MoveOutcome] = []
    if snapshot_every is not None:
        snapshots.append((0, alpha))
    for t in range(1, moves + 1):
        if rng is None:
            alpha = step_deterministic(alpha, rule)
        else:
            alpha, outcome = step_random(alpha, params, rng)
            if record_outcomes:
                outcomes.append(outcome)
        if snapshot_every is not None and (t % snapshot_every == 0 or t == moves):
            snapshots.append((t, alpha))
    _LOGGER.debug("played %d moves with %s, final state has %d piles", moves, params, alpha.num_piles)
    if snapshot_every is None:
        snapshots.append((moves, alpha))
    return Trajectory(alpha, moves, snapshots, outcomes)


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "parse_rational",
    "SolitaireParams",
    "classic_params",
    "candidates",
    "SigmaKind",
    "SigmaRule",
    "MoveOutcome",
    "rounding_total",
    "random_move",
    "step_deterministic",
    "step_random",
    "triangular_start",
    "Trajectory",
    "play",
]
