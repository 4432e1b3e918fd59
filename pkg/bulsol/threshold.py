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

""" Card-labelled pile processes driven by a shared Bernoulli matrix: the q-process, the s-threshold process and
the (r,s)-union process, plus the Chernoff bound and exact binomial tails.

The cards of a pile of size :math:`A_1` carry the labels ``1..A1`` from the top. In move ``k`` the card with
label ``i`` is removed if :math:`X_{i,k} = 1` and

* (q-process) ``i`` is among the :math:`\\lceil q A_k \\rceil` top-most remaining cards, or
* (s-threshold process) :math:`i \\le \\lceil s A_1 \\rceil`.
"""

from __future__ import annotations

import functools
import logging
import math
from fractions import Fraction
from typing import Final, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.stats

from .rng import counter_uniforms
from .settings import Settings
from .solitaire import candidates
from .utils import InvariantViolation, parallel_map

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants and type aliases
# ------------------------------------------------------------------------------------------------------------------- #

Proportion = Union[Fraction, int, float, str]

MATRIX_STREAM: Final = 0x5EED  # stream id of the Bernoulli matrices
EXHAUSTIVE_FALLBACK_SAMPLES: Final = 100000
DEFAULT_FRACTIONS: Final = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


# ------------------------------------------------------------------------------------------------------------------- #
# Exception classes
# ------------------------------------------------------------------------------------------------------------------- #


class DimensionError(ValueError):
    """Exception which is raised if a Bernoulli matrix is smaller than required by a process.

    :param message: A detailed message.
    :type message: str
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


# ------------------------------------------------------------------------------------------------------------------- #
# Helper functions
# ------------------------------------------------------------------------------------------------------------------- #


def _fraction(value: Proportion) -> Fraction:
    return Fraction(value)


def threshold_cutoff(a1: int, s: Proportion) -> int:
    """Return the label cutoff :math:`\\lceil s A_1 \\rceil` of an s-threshold process (exact).

    >>> threshold_cutoff(4, "1/2"), threshold_cutoff(5, "1/2"), threshold_cutoff(8, 0)
    (2, 3, 0)
    """
    return math.ceil(_fraction(s) * a1)


# ------------------------------------------------------------------------------------------------------------------- #
# Bernoulli matrix
# ------------------------------------------------------------------------------------------------------------------- #


class BernoulliMatrix:
    """The Bernoulli variables :math:`X_{i,k}` for the labels ``i = 1..rows`` and the moves ``k = 1..cols``.

    Use :meth:`from_seed` to derive the entries from a counter-based generator (every entry is a pure function of
    ``(seed, i, k)``) or :meth:`from_bits` to enumerate all matrices of a given size.

    :param values: The boolean ``rows x cols`` array.
    :type values: numpy.ndarray
    :param p: The success probability of the entries, if known.
    :type p: float or None
    """

    def __init__(self, values: np.ndarray, p: Optional[float] = None) -> None:
        values = np.asarray(values, dtype=bool)
        if values.ndim != 2:
            raise ValueError("Bernoulli matrix must be two-dimensional")
        self.values = values
        self.p = p

    @classmethod
    def from_seed(cls, seed: int, rows: int, cols: int, p: float, stream: int = MATRIX_STREAM) -> BernoulliMatrix:
        """Derive a matrix with :math:`P(X_{i,k} = 1) = p` from ``(seed, stream)``.

        >>> X = BernoulliMatrix.from_seed(1, 10, 3, 1.0)
        >>> X.shape, bool(X.values.all())
        ((10, 3), True)
        """
        if not 0 <= p <= 1:
            raise ValueError("p must be in [0,1] ({!r})".format(p))
        return cls(counter_uniforms(seed, stream, rows, cols) < p, p)

    @classmethod
    def from_bits(cls, bits: int, rows: int, cols: int) -> BernoulliMatrix:
        """The matrix whose entry ``(i, k)`` is bit ``(i - 1) * cols + (k - 1)`` of ``bits``.

        >>> BernoulliMatrix.from_bits(0b10, 1, 2)[1, 2]
        True
        """
        flat = [(bits >> b) & 1 for b in range(rows * cols)]
        return cls(np.array(flat, dtype=bool).reshape((rows, cols)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape  # type: ignore

    def __getitem__(self, index: Tuple[int, int]) -> bool:
        i, k = index
        return bool(self.values[i - 1, k - 1])

    def column(self, k: int) -> np.ndarray:
        """Return the entries of move ``k`` (1-based) for all labels."""
        return self.values[:, k - 1]

    def check_dimensions(self, a1: int, r: int) -> None:
        """Check that the matrix has at least ``a1`` rows and ``r`` columns.

        :raises DimensionError:
            Will be raised if the matrix is too small.
        """
        rows, cols = self.shape
        if rows < a1 or cols < r:
            raise DimensionError(
                "Bernoulli matrix of shape {}x{} is smaller than required ({}x{})".format(rows, cols, a1, r)
            )

    def __repr__(self) -> str:
        return "BernoulliMatrix(shape={}x{}, p={!r})".format(self.shape[0], self.shape[1], self.p)


# ------------------------------------------------------------------------------------------------------------------- #
# Processes
# ------------------------------------------------------------------------------------------------------------------- #


class ThresholdProcessState:
    """Result of an s-threshold process.

    :param a1: The initial pile size :math:`A_1`.
    :param s: The threshold :math:`s`.
    :param cutoff: The label cutoff :math:`\\lceil s A_1 \\rceil`.
    :param sizes: The sizes :math:`A^{[s]}_1, \\dotsc, A^{[s]}_{r+1}`.
    :param remaining: The boolean mask of the remaining labels ``1..A1``.
    :param b: The number :math:`B` of remaining labels below the cutoff after ``r`` moves.
    """

    def __init__(
        self, a1: int, s: Fraction, cutoff: int, sizes: Tuple[int, ...], remaining: np.ndarray, b: int
    ) -> None:
        self.a1 = a1
        self.s = s
        self.cutoff = cutoff
        self.sizes = sizes
        self.remaining = remaining
        self.b = b

    @property
    def integral_threshold(self) -> bool:
        """:const:`True` if :math:`s A_1` is an integer, i.e. the cutoff is not rounded."""
        return (self.s * self.a1).denominator == 1

    def __repr__(self) -> str:
        return "ThresholdProcessState(a1={:d}, s={}, sizes={}, B={:d})".format(self.a1, self.s, self.sizes, self.b)


class QProcessState:
    """Result of a q-process.

    :param a1: The initial pile size :math:`A_1`.
    :param q: The proportion :math:`q`.
    :param sizes: The sizes :math:`A_1, \\dotsc, A_{r+1}`.
    :param remaining: The boolean mask of the remaining labels ``1..A1``.
    """

    def __init__(self, a1: int, q: Fraction, sizes: Tuple[int, ...], remaining: np.ndarray) -> None:
        self.a1 = a1
        self.q = q
        self.sizes = sizes
        self.remaining = remaining

    def __repr__(self) -> str:
        return "QProcessState(a1={:d}, q={}, sizes={})".format(self.a1, self.q, self.sizes)


def _check_process_args(a1: int, r: int, p: Optional[float], X: BernoulliMatrix) -> None:
    if a1 < 1:
        raise ValueError("initial pile size must be positive ({!r})".format(a1))
    if r < 1:
        raise ValueError("number of moves must be positive ({!r})".format(r))
    if p is not None and X.p is not None and not math.isclose(p, X.p):
        raise ValueError("Bernoulli matrix was drawn with p={!r}, expected {!r}".format(X.p, p))
    X.check_dimensions(a1, r)


def run_threshold(a1: int, s: Proportion, p: Optional[float], r: int, X: BernoulliMatrix) -> ThresholdProcessState:
    """Run the s-threshold process of a pile of ``a1`` cards for ``r`` moves.

    :param a1: The initial pile size (``a1 >= 1``).
    :param s: The threshold, :math:`0 \\le s \\le 1`.
    :param p: The probability the matrix was drawn with (only checked against the matrix, may be :const:`None`).
    :param r: The number of moves (``r >= 1``).
    :param X: The Bernoulli matrix (at least ``a1 x r``).
    :returns: The final state.
    :rtype: ``ThresholdProcessState``
    :raises DimensionError:
        Will be raised if the matrix is too small.
    :raises InvariantViolation:
        Will be raised if a card above the cutoff was removed.

    >>> run_threshold(4, "1/2", 1.0, 2, BernoulliMatrix.from_seed(0, 4, 2, 1.0)).sizes
    (4, 2, 2)
    """
    s = _fraction(s)
    if not 0 <= s <= 1:
        raise ValueError("s must be in [0,1] ({!r})".format(s))
    _check_process_args(a1, r, p, X)
    cutoff = threshold_cutoff(a1, s)
    low = np.arange(1, a1 + 1) <= cutoff
    remaining = np.ones(a1, dtype=bool)
    sizes = [a1]
    for k in range(1, r + 1):
        remaining &= ~(X.column(k)[:a1] & low)
        sizes.append(int(remaining.sum()))
    b = int(np.count_nonzero(remaining & low))
    if sizes[-1] != a1 - cutoff + b:
        raise InvariantViolation("threshold process removed a card above the cutoff {:d}".format(cutoff))
    return ThresholdProcessState(a1, s, cutoff, tuple(sizes), remaining, b)


def run_qprocess(a1: int, q: Proportion, p: Optional[float], r: int, X: BernoulliMatrix) -> QProcessState:
    """Run the q-process of a pile of ``a1`` cards for ``r`` moves; the candidate window of move ``k`` are the
    :math:`\\lceil q A_k \\rceil` top-most remaining cards.

    :param a1: The initial pile size (``a1 >= 1``).
    :param q: The proportion, :math:`0 < q \\le 1`.
    :param p: The probability the matrix was drawn with (only checked against the matrix, may be :const:`None`).
    :param r: The number of moves (``r >= 1``).
    :param X: The Bernoulli matrix (at least ``a1 x r``).
    :returns: The final state.
    :rtype: ``QProcessState``
    :raises DimensionError:
        Will be raised if the matrix is too small.

    >>> run_qprocess(4, "1/2", 1.0, 2, BernoulliMatrix.from_seed(0, 4, 2, 1.0)).sizes
    (4, 2, 1)
    """
    q = _fraction(q)
    if not 0 < q <= 1:
        raise ValueError("q must be in (0,1] ({!r})".format(q))
    _check_process_args(a1, r, p, X)
    remaining = np.ones(a1, dtype=bool)
    sizes = [a1]
    for k in range(1, r + 1):
        labels = np.flatnonzero(remaining)
        window = labels[: candidates(len(labels), q)]
        remaining[window[X.column(k)[window]]] = False
        sizes.append(int(remaining.sum()))
    return QProcessState(a1, q, tuple(sizes), remaining)


# ------------------------------------------------------------------------------------------------------------------- #
# Domination
# ------------------------------------------------------------------------------------------------------------------- #


def domination_hypotheses(a1: int, q: Fraction, s: Fraction, final_threshold_size: int) -> Tuple[bool, bool]:
    """Return whether the hypotheses of the upper and the lower domination bound hold:
    :math:`\\lceil s A_1 \\rceil \\le \\lceil q A_1 \\rceil` and
    :math:`(1 - q) A^{[s]}_{r+1} \\ge A_1 - \\lceil s A_1 \\rceil`.
    """
    cutoff = threshold_cutoff(a1, s)
    return cutoff <= candidates(a1, q), (1 - q) * final_threshold_size >= a1 - cutoff


class DominationCase:
    """Outcome of the domination check for one parameter set.

    :param a1: The initial pile size.
    :param r: The number of moves.
    :param s: The threshold.
    :param q: The proportion.
    :param matrices: The number of checked Bernoulli matrices.
    :param hypothesis_i: Whether :math:`\\lceil s A_1 \\rceil \\le \\lceil q A_1 \\rceil` holds.
    :param violations_i: The number of matrices with :math:`A^{[s]}_k < A_k` for some ``k`` (counted only if
        ``hypothesis_i`` holds).
    :param hypothesis_ii: The number of matrices satisfying :math:`(1 - q) A^{[s]}_{r+1} \\ge A_1 - \\lceil s A_1
        \\rceil`.
    :param violations_ii: The number of those matrices with :math:`A^{[s]}_k > A_k` for some ``k``.
    :param exhaustive: Whether all :math:`2^{A_1 r}` matrices were enumerated.
    :param violating_seeds: The seeds of violating sampled matrices.
    """

    def __init__(
        self,
        a1: int,
        r: int,
        s: Fraction,
        q: Fraction,
        matrices: int,
        hypothesis_i: bool,
        violations_i: int,
        hypothesis_ii: int,
        violations_ii: int,
        exhaustive: bool,
        violating_seeds: Optional[List[int]] = None,
    ) -> None:
        self.a1 = a1
        self.r = r
        self.s = s
        self.q = q
        self.matrices = matrices
        self.hypothesis_i = hypothesis_i
        self.violations_i = violations_i
        self.hypothesis_ii = hypothesis_ii
        self.violations_ii = violations_ii
        self.exhaustive = exhaustive
        self.violating_seeds = violating_seeds or []

    @property
    def violations(self) -> int:
        return self.violations_i + self.violations_ii

    @property
    def hypothesis_ii_frequency(self) -> float:
        return self.hypothesis_ii / self.matrices if self.matrices else 0.0

    def to_json(self) -> dict:
        return {
            "a1": self.a1,
            "r": self.r,
            "s": str(self.s),
            "q": str(self.q),
            "matrices": self.matrices,
            "exhaustive": self.exhaustive,
            "hypothesis_i": self.hypothesis_i,
            "violations_i": self.violations_i,
            "hypothesis_ii": self.hypothesis_ii,
            "violations_ii": self.violations_ii,
        }

    def __repr__(self) -> str:
        return "DominationCase(a1={:d}, r={:d}, s={}, q={}, matrices={:d}, violations={:d})".format(
            self.a1, self.r, self.s, self.q, self.matrices, self.violations
        )


def check_domination(
    a1: int, q: Proportion, s: Proportion, p: float, r: int, seeds: Iterable[int]
) -> DominationCase:
    """Run the q-process and the s-threshold process on the same seeded Bernoulli matrices and check both
    domination bounds.

    Violations never pass silently: they are counted in the returned case and logged as errors.

    >>> case = check_domination(4, "1/2", "1/2", 1.0, 2, [0])
    >>> case.hypothesis_i, case.violations
    (True, 0)
    """
    q, s = _fraction(q), _fraction(s)
    hyp_i = threshold_cutoff(a1, s) <= candidates(a1, q)
    matrices = violations_i = hypothesis_ii = violations_ii = 0
    violating: List[int] = []
    for seed in seeds:
        X = BernoulliMatrix.from_seed(seed, a1, r, p)
        upper = run_threshold(a1, s, p, r, X).sizes
        lower = run_qprocess(a1, q, p, r, X).sizes
        matrices += 1
        bad = False
        if hyp_i and any(u < v for u, v in zip(upper, lower)):
            violations_i += 1
            bad = True
        if domination_hypotheses(a1, q, s, upper[-1])[1]:
            hypothesis_ii += 1
            if any(u > v for u, v in zip(upper, lower)):
                violations_ii += 1
                bad = True
        if bad:
            violating.append(seed)
            _LOGGER.error("domination violated for a1=%d, r=%d, s=%s, q=%s, seed=%d", a1, r, s, q, seed)
    return DominationCase(
        a1, r, s, q, matrices, hyp_i, violations_i, hypothesis_ii, violations_ii, False, violating
    )


def _lowest_bits(mask: int, count: int) -> int:
    result = 0
    while count > 0 and mask:
        low = mask & -mask
        result |= low
        mask ^= low
        count -= 1
    return result


def _subsets(mask: int) -> Iterable[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def exhaustive_case(a1: int, r: int, s: Proportion, q: Proportion) -> DominationCase:
    """Count the domination violations over all :math:`2^{A_1 r}` Bernoulli matrices exactly.

    A memoised search over the joint state of both processes branches only on the entries of a move that can
    remove a card in either process; every other entry of the move multiplies the count by 2.
    """
    q, s = _fraction(q), _fraction(s)
    cutoff = threshold_cutoff(a1, s)
    hyp_i = cutoff <= candidates(a1, q)
    low = (1 << cutoff) - 1

    # (k, threshold labels, q labels, upper violated, lower violated) -> (total, viol_i, hyp_ii, viol_ii)
    @functools.lru_cache(maxsize=None)
    def search(k: int, upper: int, lower: int, below: bool, above: bool) -> Tuple[int, int, int, int]:
        if k > r:
            hyp_ii = (1 - q) * bin(upper).count("1") >= a1 - cutoff
            return 1, int(hyp_i and below), int(hyp_ii), int(hyp_ii and above)
        window = _lowest_bits(lower, candidates(bin(lower).count("1"), q))
        relevant = (upper & low) | window
        free = a1 - bin(relevant).count("1")
        totals = [0, 0, 0, 0]
        for picked in _subsets(relevant):
            nxt_upper = upper & ~(picked & low)
            nxt_lower = lower & ~(picked & window)
            size_u, size_l = bin(nxt_upper).count("1"), bin(nxt_lower).count("1")
            counts = search(k + 1, nxt_upper, nxt_lower, below or size_u < size_l, above or size_u > size_l)
            for j in range(4):
                totals[j] += counts[j] << free
        return totals[0], totals[1], totals[2], totals[3]

    full = (1 << a1) - 1
    total, violations_i, hypothesis_ii, violations_ii = search(1, full, full, False, False)
    assert total == 1 << (a1 * r), "exhaustive count mismatch"
    case = DominationCase(a1, r, s, q, total, hyp_i, violations_i, hypothesis_ii, violations_ii, True)
    if case.violations:
        _LOGGER.error("domination violated: %s", case)
    return case


def exhaustive_domination(
    a1_max: int,
    r_max: int,
    s_grid: Sequence[Proportion] = DEFAULT_FRACTIONS,
    q_grid: Sequence[Proportion] = DEFAULT_FRACTIONS,
    max_bits: Optional[int] = None,
    samples: int = EXHAUSTIVE_FALLBACK_SAMPLES,
    threads: Optional[int] = None,
) -> List[DominationCase]:
    """Check both domination bounds for all ``a1 <= a1_max``, ``r <= r_max`` and all ``s``, ``q`` of the grids.

    Cases with more than ``max_bits`` matrix entries are checked on ``samples`` seeded matrices with ``p = 1/2``
    (the uniform distribution on all matrices) instead of exhaustively.

    :param a1_max: The maximal initial pile size.
    :param r_max: The maximal number of moves.
    :param s_grid: The thresholds.
    :param q_grid: The proportions.
    :param max_bits: The maximal ``a1 * r`` of an exhaustive case (default: setting ``exhaustive_max_bits``).
    :param samples: The number of seeded matrices of a sampled case.
    :param threads: The maximal number of worker threads.
    :returns: The cases in grid order.
    :rtype: ``list`` ( DominationCase )
    """
    max_bits = Settings["exhaustive_max_bits"] if max_bits is None else max_bits
    grid = [
        (a1, r, _fraction(s), _fraction(q))
        for a1 in range(1, a1_max + 1)
        for r in range(1, r_max + 1)
        for s in s_grid
        for q in q_grid
    ]

    def run(case: Tuple[int, int, Fraction, Fraction]) -> DominationCase:
        a1, r, s, q = case
        if a1 * r <= max_bits:
            return exhaustive_case(a1, r, s, q)
        return check_domination(a1, q, s, 0.5, r, range(samples))

    cases = parallel_map(run, grid, threads)
    _LOGGER.info(
        "checked %d domination cases, %d violations", len(cases), sum(case.violations for case in cases)
    )
    return cases


# ------------------------------------------------------------------------------------------------------------------- #
# Union process
# ------------------------------------------------------------------------------------------------------------------- #


class UnionProcess:
    """An (r,s)-union process: consecutive r-chunks, each an s-threshold process started from its chunk's initial
    pile size.

    :param gammas: The initial pile sizes of the chunks.
    :param r: The chunk length.
    :param s: The (clamped) threshold.
    :param chunks: The threshold process of every chunk.
    """

    def __init__(self, gammas: Tuple[int, ...], r: int, s: Fraction, chunks: List[ThresholdProcessState]) -> None:
        self.gammas = gammas
        self.r = r
        self.s = s
        self.chunks = chunks
        self.sizes = np.concatenate([np.asarray(chunk.sizes, dtype=np.int64) for chunk in chunks])

    def u(self, k: int) -> int:
        """Return :math:`U_k` (1-based)."""
        return int(self.sizes[k - 1])

    def __len__(self) -> int:
        return len(self.sizes)

    def __repr__(self) -> str:
        return "UnionProcess(chunks={:d}, r={:d}, s={})".format(len(self.chunks), self.r, self.s)


def run_union(gammas: Sequence[int], r: int, s: Proportion, p: float, seed: int) -> UnionProcess:
    """Run an (r,s)-union process; chunk ``j`` starts with ``gammas[j]`` cards and draws its own Bernoulli matrix.

    Thresholds above 1 are clamped to 1.

    :raises ValueError:
        Will be raised for an empty list of initial sizes.

    >>> union = run_union([4, 4], 2, "1/2", 1.0, 0)
    >>> [union.u(k) for k in range(1, len(union) + 1)]
    [4, 2, 2, 4, 2, 2]
    """
    if not gammas:
        raise ValueError("union process requires at least one chunk")
    s = _fraction(s)
    if s > 1:
        _LOGGER.warning("threshold s=%s exceeds 1 and is clamped to 1", s)
        s = Fraction(1)
    chunks = [
        run_threshold(a1, s, p, r, BernoulliMatrix.from_seed(seed, a1, r, p, stream=MATRIX_STREAM + j + 1))
        for j, a1 in enumerate(gammas)
    ]
    return UnionProcess(tuple(int(g) for g in gammas), r, s, chunks)


def expected_decay(a1: float, p: float, q: Proportion, k: int) -> float:
    """Return the exponential decay :math:`A_1 (1 - p q)^k` of a pile.

    >>> round(expected_decay(1000, 0.01, 1, 100), 2)
    366.03
    """
    if k < 0:
        raise ValueError("number of moves must be non-negative ({!r})".format(k))
    return a1 * (1.0 - p * float(_fraction(q))) ** k


def decay_trace(union: UnionProcess, p: float, q: Proportion) -> List[Tuple[int, int, float]]:
    """Return the rows ``(k, U_k, A_1 (1 - pq)^{k-1})`` of a union process started with ``gammas[0]`` cards."""
    a1 = union.gammas[0]
    return [(k, union.u(k), expected_decay(a1, p, q, k - 1)) for k in range(1, len(union) + 1)]


# ------------------------------------------------------------------------------------------------------------------- #
# Concentration
# ------------------------------------------------------------------------------------------------------------------- #


def threshold_survival_sample(
    a1: int, s: Proportion, p: float, r: int, seeds: Sequence[int], chunk_size: int = 2000
) -> np.ndarray:
    """Return, for every seed, the number :math:`B^*` of labels :math:`i \\le \\lceil s A_1 \\rceil` surviving
    ``r`` moves of the s-threshold process.

    Each such label survives independently with probability :math:`(1 - p)^r`, so
    :math:`B^* \\sim \\mathrm{Bin}(\\lceil s A_1 \\rceil, (1 - p)^r)`. The values equal :attr:`ThresholdProcessState.b`
    of :func:`run_threshold` on :meth:`BernoulliMatrix.from_seed`.
    """
    cutoff = threshold_cutoff(a1, s)
    seed_array = np.asarray(seeds, dtype=np.uint64)
    if cutoff == 0:
        return np.zeros(len(seed_array), dtype=np.int64)
    result = np.empty(len(seed_array), dtype=np.int64)
    for start in range(0, len(seed_array), chunk_size):
        batch = seed_array[start : start + chunk_size]
        survive = np.all(counter_uniforms(batch, MATRIX_STREAM, cutoff, r) >= p, axis=2)
        result[start : start + len(batch)] = survive.sum(axis=1)
    return result


def survival_goodness_of_fit(
    sample: np.ndarray, a1: int, s: Proportion, p: float, r: int, min_expected: float = 5.0
) -> Tuple[float, float]:
    """Chi-square goodness-of-fit of a :func:`threshold_survival_sample` against
    :math:`\\mathrm{Bin}(\\lceil s A_1 \\rceil, (1 - p)^r)`; neighbouring outcomes are pooled until every bin
    expects at least ``min_expected`` observations.

    :returns: The chi-square statistic and the p-value.
    :rtype: ``tuple`` ( float, float )
    """
    cutoff = threshold_cutoff(a1, s)
    total = len(sample)
    expected = scipy.stats.binom.pmf(np.arange(cutoff + 1), cutoff, (1.0 - p) ** r) * total
    observed = np.bincount(np.asarray(sample, dtype=np.int64), minlength=cutoff + 1).astype(float)
    obs_bins: List[float] = []
    exp_bins: List[float] = []
    acc_obs = acc_exp = 0.0
    for o, e in zip(observed, expected):
        acc_obs += o
        acc_exp += e
        if acc_exp >= min_expected:
            obs_bins.append(acc_obs)
            exp_bins.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if exp_bins:
        obs_bins[-1] += acc_obs
        exp_bins[-1] += acc_exp
    if len(exp_bins) < 2:
        raise ValueError("sample too small for a chi-square test ({:d} bins)".format(len(exp_bins)))
    exp_arr = np.asarray(exp_bins)
    exp_arr *= sum(obs_bins) / exp_arr.sum()
    statistic, pvalue = scipy.stats.chisquare(obs_bins, exp_arr)
    return float(statistic), float(pvalue)


class ChunkDeviation:
    """Samples of the chunk deviation :math:`|B + F(1 - s') - F(1 - pq)^r|` with :math:`s' = \\lceil sF \\rceil/F`.

    :param samples: The deviation per seed.
    :param reference: The reference deviation :math:`\\varepsilon p^2 q^2 n r`.
    :param integral_threshold: Whether :math:`sF` is an integer (otherwise the cutoff was rounded).
    """

    def __init__(self, samples: np.ndarray, reference: float, integral_threshold: bool) -> None:
        self.samples = samples
        self.reference = reference
        self.integral_threshold = integral_threshold

    @property
    def fraction_exceeding(self) -> float:
        return float(np.mean(self.samples > self.reference)) if len(self.samples) else 0.0

    def to_json(self) -> dict:
        return {
            "mean": float(np.mean(self.samples)) if len(self.samples) else 0.0,
            "max": float(np.max(self.samples)) if len(self.samples) else 0.0,
            "reference": self.reference,
            "fraction_exceeding": self.fraction_exceeding,
            "integral_threshold": self.integral_threshold,
        }


def chunk_deviation(
    f: int, s: Proportion, p: float, q: Proportion, r: int, seeds: Sequence[int], n: int, epsilon: float
) -> ChunkDeviation:
    """Sample the deviation of an r-chunk of initial size ``f`` from exponential decay, next to the reference
    deviation :math:`\\varepsilon p^2 q^2 n r`.
    """
    s, q = _fraction(s), _fraction(q)
    cutoff = threshold_cutoff(f, s)
    integral = (s * f).denominator == 1
    if not integral:
        _LOGGER.warning("s*F=%s is not an integer, the threshold is rounded up to %d", s * f, cutoff)
    b = threshold_survival_sample(f, s, p, r, seeds)
    qf = float(q)
    samples = np.abs(b + (f - cutoff) - f * (1.0 - p * qf) ** r)
    return ChunkDeviation(samples, epsilon * p**2 * qf**2 * n * r, integral)


# ------------------------------------------------------------------------------------------------------------------- #
# Chernoff bound
# ------------------------------------------------------------------------------------------------------------------- #


def chernoff_bound(m: int, p: float, gamma: float) -> float:
    """Return the Chernoff bound :math:`2 \\exp(-\\gamma^2 / (3\\mu))`, :math:`\\mu = m p`, on
    :math:`P(|X - \\mu| \\ge \\gamma)` for :math:`X \\sim \\mathrm{Bin}(m, p)`.

    :raises ValueError:
        Will be raised unless :math:`0 < \\gamma < \\mu`.

    >>> round(chernoff_bound(100, 0.5, 25), 6)
    0.031008
    """
    mu = m * p
    if not 0 < gamma < mu:
        raise ValueError("gamma must be in (0, mu={!r}) ({!r})".format(mu, gamma))
    return 2.0 * math.exp(-(gamma**2) / (3.0 * mu))


def exact_two_sided_tail(m: int, p: float, gamma: float) -> float:
    """Return :math:`P(|X - m p| \\ge \\gamma)` for :math:`X \\sim \\mathrm{Bin}(m, p)` by summing the exact
    probability mass function.
    """
    ks = np.arange(m + 1)
    mask = np.abs(ks - m * p) >= gamma
    return float(np.sum(scipy.stats.binom.pmf(ks[mask], m, p)))


def chernoff_table(
    m: int, p: float, gammas: Optional[Sequence[float]] = None, steps: int = 20
) -> List[Tuple[float, float, float]]:
    """Return the rows ``(gamma, exact tail, bound)``; by default ``gamma`` runs over ``mu * j / steps`` for
    ``j = 1..steps-1``.
    """
    mu = m * p
    gammas = [mu * j / steps for j in range(1, steps)] if gammas is None else gammas
    return [(float(g), exact_two_sided_tail(m, p, g), chernoff_bound(m, p, g)) for g in gammas]


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "DimensionError",
    "threshold_cutoff",
    "BernoulliMatrix",
    "ThresholdProcessState",
    "QProcessState",
    "run_threshold",
    "run_qprocess",
    "domination_hypotheses",
    "DominationCase",
    "check_domination",
    "exhaustive_case",
    "exhaustive_domination",
    "UnionProcess",
    "run_union",
    "expected_decay",
    "decay_trace",
    "threshold_survival_sample",
    "survival_goodness_of_fit",
    "ChunkDeviation",
    "chunk_deviation",
    "chernoff_bound",
    "exact_two_sided_tail",
    "chernoff_table",
]
