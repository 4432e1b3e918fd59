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

""" Exact transition kernel and stationary distribution of :math:`\\mathscr{B}(n,p,q)` on the partitions of
small ``n``.

Example:

.. code-block:: python

    params = SolitaireParams(8, 0.3, "1/2")
    kernel = build_kernel(params)
    pi = stationary(kernel)
    print(pi.probability(Partition([4, 3, 1])))
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from typing import Dict, Final, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg
import scipy.sparse
from scipy.sparse.csgraph import connected_components

from .partitions import Partition, WeakComposition
from .settings import Settings
from .shapes import LimitShape, RescaledBoundary, ScalingFactor, ScalingMode
from .solitaire import SolitaireParams, candidates
from .utils import CapacityError, InvariantViolation, parallel_map

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants
# ------------------------------------------------------------------------------------------------------------------- #

ROW_SUM_TOLERANCE: Final = 1e-12


# ------------------------------------------------------------------------------------------------------------------- #
# Exception classes
# ------------------------------------------------------------------------------------------------------------------- #


class ConvergenceError(RuntimeError):
    """Exception which is raised if the power iteration does not converge within the iteration cap.

    :param message: A detailed message.
    :type message: str
    :param residual: The last residual :math:`\\|\\pi P - \\pi\\|_1`.
    :type residual: float
    :param iterations: The number of performed iterations.
    :type iterations: int
    """

    def __init__(self, message: str, residual: float, iterations: int) -> None:
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class PeriodicChainError(ValueError):
    """Exception which is raised if a stationary distribution is requested for ``p = 1``, where the chain is the
    deterministic solitaire and may be periodic or reducible.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


# ------------------------------------------------------------------------------------------------------------------- #
# State space
# ------------------------------------------------------------------------------------------------------------------- #


def _partitions(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


class StateIndex:
    """The partitions of ``n`` in reverse-lexicographic order with a bijective index.

    :param n: The number of cards.
    :type n: int
    :param states: The partitions of ``n``.
    :type states: list(Partition)

    >>> [str(lam) for lam in enumerate_partitions(4)]
    ['4', '3+1', '2+2', '2+1+1', '1+1+1+1']
    """

    def __init__(self, n: int, states: List[Partition]) -> None:
        self.n = n
        self._states = states
        self._index = {lam: i for i, lam in enumerate(states)}
        assert len(self._index) == len(states), "duplicate states"

    def index(self, lam: Partition) -> int:
        """Return the index of the passed partition.

        :raises KeyError:
            Will be raised if the partition is not a state of this index.
        """
        return self._index[lam]

    def __getitem__(self, i: int) -> Partition:
        return self._states[i]

    def __contains__(self, lam: object) -> bool:
        return lam in self._index

    def __len__(self) -> int:
        return len(self._states)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._states)

    def __repr__(self) -> str:
        return "StateIndex(n={:d}, states={:d})".format(self.n, len(self._states))


def enumerate_partitions(n: int, cap: Optional[int] = None) -> StateIndex:
    """Enumerate the partitions of ``n`` in reverse-lexicographic order.

    :param n: The number of cards, ``1 <= n <= cap``.
    :type n: int
    :param cap: The maximal ``n`` (default :const:`None`, which means setting ``state_cap``).
    :type cap: int or None
    :returns: The state index.
    :rtype: ``StateIndex``
    :raises ValueError:
        Will be raised for ``n < 1``.
    :raises CapacityError:
        Will be raised if ``n`` exceeds the cap.

    >>> len(enumerate_partitions(10))
    42
    """
    cap = Settings["state_cap"] if cap is None else cap
    if n < 1:
        raise ValueError("number of cards must be positive ({!r})".format(n))
    if n > cap:
        raise CapacityError("n={:d} exceeds the state cap of the exact solver ({:d})".format(n, cap), cap)
    return StateIndex(n, [Partition(parts) for parts in _partitions(n, n)])


# ------------------------------------------------------------------------------------------------------------------- #
# Transition rows
# ------------------------------------------------------------------------------------------------------------------- #


def _binomial_pmf(c: int, p: float) -> List[float]:
    return [math.comb(c, x) * p**x * (1.0 - p) ** (c - x) for x in range(c + 1)]


def _group_outcomes(h: int, m: int, c: int, pmf: Sequence[float]) -> List[Tuple[Tuple[int, ...], int, float]]:
    """Outcomes of ``m`` piles of size ``h`` with ``c`` candidates each, as (remainders, picked, probability)."""
    outcomes = []
    for picks in itertools.combinations_with_replacement(range(c + 1), m):
        weight = math.factorial(m)
        for mult in Counter(picks).values():
            weight //= math.factorial(mult)
        prob = float(weight)
        for x in picks:
            prob *= pmf[x]
        if prob > 0.0:
            outcomes.append((tuple(h - x for x in picks), sum(picks), prob))
    return outcomes


def transition_row(
    lam: Partition, params: SolitaireParams, work_budget: Optional[int] = None
) -> Dict[Partition, float]:
    """Compute the exact distribution of the sorted state after one move from ``lam``.

    Piles of equal size are grouped and the multisets of their picked counts are enumerated, weighted with
    the multinomial coefficient and the binomial probabilities.

    :param lam: The current partition of ``params.n``.
    :type lam: Partition
    :param params: The parameters of the chain.
    :type params: SolitaireParams
    :param work_budget: The maximal number of weighted terms (default :const:`None`, which means setting
        ``row_work_budget``).
    :type work_budget: int or None
    :returns: The target partitions and their probabilities.
    :rtype: ``dict``
    :raises CapacityError:
        Will be raised if the enumeration exceeds the work budget.

    >>> row = transition_row(Partition([1, 1]), SolitaireParams(2, 0.5, 1))
    >>> sorted((str(lam), prob) for lam, prob in row.items())
    [('1+1', 0.75), ('2', 0.25)]
    """
    budget = Settings["row_work_budget"] if work_budget is None else work_budget
    if lam.n != params.n:
        raise ValueError("partition holds {:d} cards, expected {:d}".format(lam.n, params.n))
    # (sorted remainders, picked cards) -> probability
    partial: Dict[Tuple[Tuple[int, ...], int], float] = {((), 0): 1.0}
    work = 0
    for h, m in sorted(Counter(lam.parts).items(), reverse=True):
        c = candidates(h, params.q)
        outcomes = _group_outcomes(h, m, c, _binomial_pmf(c, params.p))
        work += len(partial) * len(outcomes)
        if work > budget:
            raise CapacityError(
                "transition row of {!s} exceeds the work budget ({:d} terms)".format(lam, budget), budget
            )
        merged: Dict[Tuple[Tuple[int, ...], int], float] = {}
        for (rest, picked), prob in partial.items():
            for remainders, group_picked, group_prob in outcomes:
                key = (tuple(sorted(rest + remainders, reverse=True)), picked + group_picked)
                merged[key] = merged.get(key, 0.0) + prob * group_prob
        partial = merged
    row: Dict[Partition, float] = {}
    for (rest, picked), prob in partial.items():
        target = Partition(sorted((h for h in rest + (picked,) if h > 0), reverse=True))
        row[target] = row.get(target, 0.0) + prob
    _LOGGER.debug("transition row of %s: %d targets, %d terms", lam, len(row), work)
    return row


def composition_transition_row(
    alpha: WeakComposition, params: SolitaireParams, work_budget: Optional[int] = None
) -> Dict[WeakComposition, float]:
    """Compute the exact distribution of the composition after one move from ``alpha``, enumerating every
    picked-count vector individually.

    Sorting and aggregating the result yields :func:`transition_row` of the sorted state.

    :raises CapacityError:
        Will be raised if the enumeration exceeds the work budget.
    """
    budget = Settings["row_work_budget"] if work_budget is None else work_budget
    cands = [candidates(h, params.q) for h in alpha.parts]
    work = math.prod(c + 1 for c in cands)
    if work > budget:
        raise CapacityError(
            "composition row of {!s} exceeds the work budget ({:d} terms)".format(alpha, budget), budget
        )
    pmfs = [_binomial_pmf(c, params.p) for c in cands]
    row: Dict[WeakComposition, float] = {}
    for picks in itertools.product(*(range(c + 1) for c in cands)):
        prob = math.prod(pmf[x] for pmf, x in zip(pmfs, picks))
        if prob > 0.0:
            target = WeakComposition([sum(picks)] + [h - x for h, x in zip(alpha.parts, picks)])
            row[target] = row.get(target, 0.0) + prob
    return row


# ------------------------------------------------------------------------------------------------------------------- #
# Kernel
# ------------------------------------------------------------------------------------------------------------------- #


class TransitionKernel:
    """A sparse row-stochastic transition matrix over a :class:`StateIndex`.

    :param params: The parameters of the chain.
    :param index: The state index.
    :param matrix: The transition matrix (``scipy.sparse.csr_matrix``).
    """

    def __init__(self, params: SolitaireParams, index: StateIndex, matrix: scipy.sparse.csr_matrix) -> None:
        self.params = params
        self.index = index
        self.matrix = matrix

    def row(self, lam: Partition) -> Dict[Partition, float]:
        i = self.index.index(lam)
        start, end = self.matrix.indptr[i], self.matrix.indptr[i + 1]
        return {
            self.index[j]: float(v) for j, v in zip(self.matrix.indices[start:end], self.matrix.data[start:end])
        }

    def entries(self) -> Iterator[Tuple[Partition, Partition, float]]:
        """Iterate over all non-zero entries ``(from, to, probability)`` in state order."""
        coo = self.matrix.tocoo()
        order = np.lexsort((coo.col, coo.row))
        for k in order:
            yield self.index[int(coo.row[k])], self.index[int(coo.col[k])], float(coo.data[k])

    def max_row_error(self) -> float:
        """Return :math:`\\max_i |\\sum_j P_{ij} - 1|`."""
        return float(np.max(np.abs(np.asarray(self.matrix.sum(axis=1)).ravel() - 1.0)))

    def __repr__(self) -> str:
        return "TransitionKernel({!r}, states={:d}, nnz={:d})".format(self.params, len(self.index), self.matrix.nnz)


def build_kernel(
    params: SolitaireParams,
    index: Optional[StateIndex] = None,
    threads: Optional[int] = 1,
    work_budget: Optional[int] = None,
) -> TransitionKernel:
    """Build the exact transition kernel of :math:`\\mathscr{B}(n,p,q)` on the partitions of ``n``.

    The rows are pure Python and hold the GIL, so the rows are built sequentially by default; ``threads`` only
    spreads them over a thread pool (see :func:`~bulsol.utils.parallel_map`), without a speedup in CPython.

    :param params: The parameters of the chain.
    :type params: SolitaireParams
    :param index: The state index (default :const:`None`, which means :func:`enumerate_partitions`).
    :type index: StateIndex or None
    :param threads: The maximal number of worker threads (default 1; :const:`None` uses
        :func:`~bulsol.utils.thread_count`).
    :type threads: int or None
    :param work_budget: The per-row work budget, see :func:`transition_row`.
    :type work_budget: int or None
    :returns: The transition kernel.
    :rtype: ``TransitionKernel``
    :raises CapacityError:
        Will be raised if ``n`` exceeds the state cap or a row exceeds the work budget.
    :raises InvariantViolation:
        Will be raised if a row does not sum to 1.
    """
    index = enumerate_partitions(params.n) if index is None else index
    rows = parallel_map(lambda lam: transition_row(lam, params, work_budget), index, threads)
    data: List[float] = []
    cols: List[int] = []
    indptr = [0]
    for row in rows:
        for target, prob in sorted(row.items(), key=lambda item: index.index(item[0])):
            cols.append(index.index(target))
            data.append(prob)
        indptr.append(len(cols))
    size = len(index)
    matrix = scipy.sparse.csr_matrix((np.array(data), np.array(cols, dtype=np.int64), np.array(indptr)), (size, size))
    kernel = TransitionKernel(params, index, matrix)
    error = kernel.max_row_error()
    if error > ROW_SUM_TOLERANCE:
        raise InvariantViolation("transition kernel is not row-stochastic (max error {:.3g})".format(error))
    _LOGGER.info("built kernel for %s: %d states, %d non-zero entries", params, size, matrix.nnz)
    return kernel


class ReachabilityReport:
    """The strongly connected components of a transition kernel.

    :param components: The number of strongly connected components.
    :param labels: The component label of every state.
    """

    def __init__(self, components: int, labels: np.ndarray) -> None:
        self.components = components
        self.labels = labels

    @property
    def irreducible(self) -> bool:
        return self.components == 1

    def to_json(self) -> dict:
        return {"components": self.components, "irreducible": self.irreducible}

    def __repr__(self) -> str:
        return "ReachabilityReport(components={:d}, irreducible={})".format(self.components, self.irreducible)


def reachability(kernel: TransitionKernel) -> ReachabilityReport:
    """Determine the strongly connected components of the kernel's transition graph (reported, not asserted)."""
    components, labels = connected_components(kernel.matrix, directed=True, connection="strong")
    report = ReachabilityReport(int(components), labels)
    _LOGGER.info("reachability of %s: %s", kernel.params, report)
    return report


# ------------------------------------------------------------------------------------------------------------------- #
# Stationary distribution
# ------------------------------------------------------------------------------------------------------------------- #


class StationaryDistribution:
    """The stationary distribution :math:`\\pi` of a chain together with solver metadata.

    :param kernel: The transition kernel.
    :param pi: The probability vector over the kernel's state index.
    :param method: The solver method (``'trivial'``, ``'dense'`` or ``'power'``).
    :param residual: The residual :math:`\\|\\pi P - \\pi\\|_1`.
    :param iterations: The number of power iterations (0 for direct methods).
    """

    def __init__(
        self, kernel: TransitionKernel, pi: np.ndarray, method: str, residual: float, iterations: int = 0
    ) -> None:
        self.kernel = kernel
        self.pi = pi
        self.method = method
        self.residual = residual
        self.iterations = iterations

    @property
    def index(self) -> StateIndex:
        return self.kernel.index

    @property
    def params(self) -> SolitaireParams:
        return self.kernel.params

    def probability(self, lam: Partition) -> float:
        return float(self.pi[self.index.index(lam)]) if lam in self.index else 0.0

    def items(self) -> Iterator[Tuple[Partition, float]]:
        for i, lam in enumerate(self.index):
            yield lam, float(self.pi[i])

    def __repr__(self) -> str:
        return "StationaryDistribution(method={!r}, residual={:.3g}, states={:d})".format(
            self.method, self.residual, len(self.pi)
        )


def _residual(matrix: scipy.sparse.csr_matrix, pi: np.ndarray) -> float:
    return float(np.sum(np.abs(matrix.T @ pi - pi)))


def stationary(
    kernel: TransitionKernel,
    dense_max_states: Optional[int] = None,
    tolerance: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> StationaryDistribution:
    """Solve :math:`\\pi P = \\pi` for the stationary distribution of the kernel.

    Up to ``dense_max_states`` states the linear system :math:`(P^T - I)\\pi = 0` with one equation replaced by
    the normalization :math:`\\sum \\pi = 1` is solved directly, otherwise the power iteration is used.

    :param kernel: The transition kernel (``p < 1``).
    :type kernel: TransitionKernel
    :param dense_max_states: The maximal number of states for the direct solve (default: setting
        ``dense_solve_max_states``).
    :param tolerance: The residual tolerance of the power iteration (default: setting ``power_tolerance``).
    :param max_iterations: The iteration cap of the power iteration (default: setting ``power_max_iterations``).
    :returns: The stationary distribution.
    :rtype: ``StationaryDistribution``
    :raises PeriodicChainError:
        Will be raised for ``p = 1``.
    :raises ConvergenceError:
        Will be raised if the power iteration does not converge.
    """
    if kernel.params.p >= 1.0:
        raise PeriodicChainError(
            "no stationary solve for p=1: the chain is the deterministic solitaire and may be periodic or reducible"
        )
    dense_max_states = Settings["dense_solve_max_states"] if dense_max_states is None else dense_max_states
    tolerance = Settings["power_tolerance"] if tolerance is None else tolerance
    max_iterations = Settings["power_max_iterations"] if max_iterations is None else max_iterations
    size = len(kernel.index)
    matrix = kernel.matrix
    if size == 1:
        return StationaryDistribution(kernel, np.ones(1), "trivial", 0.0)
    if size <= dense_max_states:
        system = matrix.T.toarray() - np.eye(size)
        system[-1, :] = 1.0
        rhs = np.zeros(size)
        rhs[-1] = 1.0
        pi = scipy.linalg.solve(system, rhs)
        pi = np.clip(pi, 0.0, None)
        pi /= pi.sum()
        result = StationaryDistribution(kernel, pi, "dense", _residual(matrix, pi))
    else:
        pi = np.full(size, 1.0 / size)
        transposed = matrix.T.tocsr()
        residual = math.inf
        iterations = 0
        while residual > tolerance:
            if iterations >= max_iterations:
                raise ConvergenceError(
                    "power iteration did not converge in {:d} iterations (residual {:.3g})".format(
                        iterations, residual
                    ),
                    residual,
                    iterations,
                )
            nxt = transposed @ pi
            nxt /= nxt.sum()
            residual = float(np.sum(np.abs(nxt - pi)))
            pi = nxt
            iterations += 1
        result = StationaryDistribution(kernel, pi, "power", _residual(matrix, pi), iterations)
    if result.residual > Settings["stationary_residual"]:
        _LOGGER.warning("stationary residual %.3g exceeds %.3g", result.residual, Settings["stationary_residual"])
    _LOGGER.info("stationary distribution of %s: %s", kernel.params, result)
    return result


def stationary_shape_mass(
    pi: StationaryDistribution,
    phi: LimitShape,
    mode: Union[ScalingMode, str],
    epsilon: float,
    x: float,
    value: Optional[float] = None,
) -> float:
    """Return the exact :math:`\\pi`-mass of the partitions whose rescaled boundary deviates from :math:`\\phi`
    by less than ``epsilon`` at the position ``x``.

    :param pi: The stationary distribution.
    :param phi: The limit shape.
    :param mode: The scaling mode (an explicit scaling additionally requires ``value``).
    :param epsilon: The positive tolerance.
    :param x: The non-negative position.
    :param value: The explicit scaling factor.
    :returns: The probability mass.
    :rtype: ``float``
    :raises ValueError:
        Will be raised for a non-positive tolerance or a negative position.
    """
    if not epsilon > 0:
        raise ValueError("tolerance must be positive ({!r})".format(epsilon))
    if not x >= 0:
        raise ValueError("the position must be non-negative ({!r})".format(x))
    mode = ScalingMode.from_str(mode) if isinstance(mode, str) else mode
    target = float(phi(x))
    mass = 0.0
    for lam, prob in pi.items():
        scaling = ScalingFactor.for_config(mode, lam, pi.params.p, pi.params.q, value)
        if abs(float(RescaledBoundary(lam, scaling)(x)) - target) < epsilon:
            mass += prob
    return mass


def expected_shape(
    pi: StationaryDistribution, mode: Union[ScalingMode, str], grid: Sequence[float], value: Optional[float] = None
) -> np.ndarray:
    """Return the :math:`\\pi`-expectation of the rescaled boundary at the grid points."""
    mode = ScalingMode.from_str(mode) if isinstance(mode, str) else mode
    xs = np.asarray(grid, dtype=float)
    total = np.zeros_like(xs)
    for lam, prob in pi.items():
        scaling = ScalingFactor.for_config(mode, lam, pi.params.p, pi.params.q, value)
        total += prob * RescaledBoundary(lam, scaling)(xs)
    return total


def total_variation(pi: StationaryDistribution, counts: Mapping[Partition, Union[int, float]]) -> float:
    """Return the total-variation distance between :math:`\\pi` and an empirical distribution.

    :param pi: The stationary distribution.
    :param counts: The (non-normalized) empirical counts over sorted states.
    :raises ValueError:
        Will be raised for empty counts.
    """
    total = float(sum(counts.values()))
    if total <= 0:
        raise ValueError("empirical distribution is empty")
    dist = sum(abs(prob - counts.get(lam, 0) / total) for lam, prob in pi.items())
    dist += sum(c / total for lam, c in counts.items() if lam not in pi.index)
    return 0.5 * dist


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "ConvergenceError",
    "PeriodicChainError",
    "StateIndex",
    "enumerate_partitions",
    "transition_row",
    "composition_transition_row",
    "TransitionKernel",
    "build_kernel",
    "ReachabilityReport",
    "reachability",
    "StationaryDistribution",
    "stationary",
    "stationary_shape_mass",
    "expected_shape",
    "total_variation",
]
