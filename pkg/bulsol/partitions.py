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

""" Card configurations of the solitaire: integer partitions (piles sorted by size) and weak compositions
(piles ordered by creation time, newest first, possibly with empty "bowls" in between), together with
their diagram-boundary function.
"""

from __future__ import annotations

import math
import re
from typing import Final, Iterable, Iterator, Tuple, Type, TypeVar, Union

# ------------------------------------------------------------------------------------------------------------------- #
# Constants and type aliases
# ------------------------------------------------------------------------------------------------------------------- #

STATE_SEPARATOR: Final = "+"  # separator of the parts in the string representation, e.g. '4+3+2+1'

PartitionT = TypeVar("PartitionT", bound="Partition")
WeakCompositionT = TypeVar("WeakCompositionT", bound="WeakComposition")


# ------------------------------------------------------------------------------------------------------------------- #
# Helper functions
# ------------------------------------------------------------------------------------------------------------------- #


def _parse_parts(s: str) -> Tuple[int, ...]:
    s = s.strip()
    if s in ("", "0", "()"):
        return ()
    if not re.match(r"^\d+(\+\d+)*$", s):
        raise ValueError("invalid configuration string {!r}; expected e.g. '4+3+2+1'".format(s))
    return tuple(int(v) for v in s.split(STATE_SEPARATOR))


# ------------------------------------------------------------------------------------------------------------------- #
# Configuration classes
# ------------------------------------------------------------------------------------------------------------------- #


class Partition:
    """Representation of an integer partition :math:`\\lambda` of ``n``, i.e. a non-increasing sequence of
    positive integers (the pile sizes sorted in descending order); :math:`\\lambda_i = 0` for :math:`i > N(\\lambda)`.

    :param parts: The parts of the partition (non-increasing, strictly positive).
    :type parts: iterable of int
    :raises ValueError:
        Will be raised if the passed parts are not strictly positive and non-increasing.

    >>> lam = Partition([4, 3, 2, 1])
    >>> lam.n, len(lam), lam.part(2), lam.part(7)
    (10, 4, 3, 0)
    >>> str(lam)
    '4+3+2+1'
    """

    __slots__ = ("_parts", "_n")

    def __init__(self, parts: Iterable[int]) -> None:
        self._parts: Tuple[int, ...] = tuple(int(v) for v in parts)
        if any(v <= 0 for v in self._parts):
            raise ValueError("parts of a partition must be strictly positive {}".format(self._parts))
        if any(a < b for a, b in zip(self._parts, self._parts[1:])):
            raise ValueError("parts of a partition must be non-increasing {}".format(self._parts))
        self._n = sum(self._parts)

    @classmethod
    def from_str(cls: Type[PartitionT], s: str) -> PartitionT:
        """Create a partition from its string representation (e.g. ``'4+3+2+1'``).

        :param s: The string representation.
        :type s: str
        :returns: The partition.
        :rtype: ``Partition``
        :raises ValueError:
            Will be raised for an invalid string representation.
        """
        return cls(_parse_parts(s))

    @property
    def parts(self) -> Tuple[int, ...]:
        """The parts of the partition."""
        return self._parts

    @property
    def n(self) -> int:
        """The total number of cards (sum of the parts)."""
        return self._n

    @property
    def num_piles(self) -> int:
        """The number :math:`N(\\lambda)` of (non-empty) parts."""
        return len(self._parts)

    def part(self, i: int) -> int:
        """Return the ``i``-th part (1-based), ``0`` beyond the last part."""
        assert i >= 1, "the index of a part is 1-based"
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(("Partition", self._parts))

    def __repr__(self) -> str:
        return "Partition({})".format(list(self._parts))

    def __str__(self) -> str:
        return STATE_SEPARATOR.join(str(v) for v in self._parts) if self._parts else "0"


class WeakComposition:
    """Representation of a weak composition :math:`\\alpha` of ``n``: the pile sizes in order of creation time
    (index 1 is the newest pile). Empty piles (bowls) between non-empty ones are kept; trailing zeros are not
    stored.

    :param parts: The pile sizes in creation-time order (non-negative).
    :type parts: iterable of int
    :raises ValueError:
        Will be raised if a part is negative.

    >>> alpha = WeakComposition([3, 0, 2, 4, 1, 0, 0])
    >>> alpha.parts, alpha.n, alpha.num_piles
    ((3, 0, 2, 4, 1), 10, 4)
    """

    __slots__ = ("_parts", "_n")

    def __init__(self, parts: Iterable[int]) -> None:
        values = [int(v) for v in parts]
        if any(v < 0 for v in values):
            raise ValueError("parts of a weak composition must be non-negative {}".format(values))
        while values and values[-1] == 0:
            values.pop()  # drop trailing zeros
        self._parts: Tuple[int, ...] = tuple(values)
        self._n = sum(values)

    @classmethod
    def from_str(cls: Type[WeakCompositionT], s: str) -> WeakCompositionT:
        """Create a weak composition from its string representation (e.g. ``'3+0+2+4+1'``)."""
        return cls(_parse_parts(s))

    @classmethod
    def from_partition(cls: Type[WeakCompositionT], lam: Partition) -> WeakCompositionT:
        """Create a weak composition with the piles of the passed partition (largest pile newest)."""
        return cls(lam.parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        """The stored pile sizes (up to the last non-empty pile)."""
        return self._parts

    @property
    def n(self) -> int:
        """The total number of cards."""
        return self._n

    @property
    def num_piles(self) -> int:
        """The number :math:`N(\\alpha)` of non-empty piles."""
        return sum(1 for v in self._parts if v > 0)

    @property
    def bowls(self) -> int:
        """The number of stored bowls (including empty ones)."""
        return len(self._parts)

    def part(self, i: int) -> int:
        """Return the size of the ``i``-th pile (1-based), ``0`` beyond the stored bowls."""
        assert i >= 1, "the index of a pile is 1-based"
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def ord(self) -> Partition:
        """Return the partition with the piles sorted by size, see :func:`ordered`."""
        return ordered(self)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeakComposition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(("WeakComposition", self._parts))

    def __repr__(self) -> str:
        return "WeakComposition({})".format(list(self._parts))

    def __str__(self) -> str:
        return STATE_SEPARATOR.join(str(v) for v in self._parts) if self._parts else "0"


Configuration = Union[Partition, WeakComposition]


# ------------------------------------------------------------------------------------------------------------------- #
# Operations
# ------------------------------------------------------------------------------------------------------------------- #


def boundary(config: Configuration, x: float) -> int:
    """Evaluate the diagram-boundary function :math:`\\partial\\alpha(x) = \\alpha_{\\lfloor x \\rfloor + 1}`.

    :param config: The partition or weak composition.
    :type config: Partition or WeakComposition
    :param x: The non-negative position.
    :type x: float
    :returns: The part at index :math:`\\lfloor x \\rfloor + 1` (``0`` beyond the stored parts).
    :rtype: ``int``
    :raises ValueError:
        Will be raised for a negative or non-finite position.

    >>> boundary(WeakComposition([3, 0, 2, 4, 1]), 0.5)
    3
    >>> boundary(WeakComposition([3, 0, 2, 4, 1]), 3.0)
    4
    >>> boundary(Partition([5]), 7)
    0
    """
    if not (x >= 0) or math.isinf(x):
        raise ValueError("the position must be a finite non-negative number ({!r})".format(x))
    return config.part(math.floor(x) + 1)


def ordered(alpha: Configuration) -> Partition:
    """Arrange the parts of a weak composition in descending order (the ``ord`` operator); zero parts are dropped.

    :param alpha: The weak composition (a partition is returned unchanged).
    :type alpha: WeakComposition or Partition
    :returns: The partition with the same multiset of non-zero parts.
    :rtype: ``Partition``

    >>> ordered(WeakComposition([3, 0, 2, 4, 1]))
    Partition([4, 3, 2, 1])
    """
    if isinstance(alpha, Partition):
        return alpha
    return Partition(sorted((v for v in alpha.parts if v > 0), reverse=True))


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = ["Partition", "WeakComposition", "Configuration", "boundary", "ordered"]
