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

""" Reproducible random number streams.

Two counter-based sources are provided:

  - :class:`RngStream`, a sequential stream on top of NumPy's ``Philox`` bit generator, keyed by
    ``(seed, stream)`` and started at a counter block ``position``; it drives the solitaire moves.
  - :func:`counter_uniforms`, a stateless Philox4x32-10 evaluation which maps ``(seed, stream, i, k)``
    directly to a uniform variate; it drives the Bernoulli matrices of the coupling processes.
"""

from __future__ import annotations

from typing import Final, Sequence, Union

import numpy as np

# ------------------------------------------------------------------------------------------------------------------- #
# Constants
# ------------------------------------------------------------------------------------------------------------------- #

MASK32: Final = 0xFFFFFFFF
MASK64: Final = 0xFFFFFFFFFFFFFFFF

PHILOX_M4x32_0: Final = 0xD2511F53
PHILOX_M4x32_1: Final = 0xCD9E8D57
PHILOX_W32_0: Final = 0x9E3779B9
PHILOX_W32_1: Final = 0xBB67AE85
PHILOX_ROUNDS: Final = 10

BLOCK_SHIFT: Final = 128  # a stream position selects a block of 2**128 counter values


# ------------------------------------------------------------------------------------------------------------------- #
# Sequential streams
# ------------------------------------------------------------------------------------------------------------------- #


class RngStream:
    """A reproducible random stream identified by ``(seed, stream, position)``.

    Identical triples yield identical draws; distinct stream ids give independent streams for concurrently
    running trajectories.

    :param seed: The 64-bit master seed.
    :type seed: int
    :param stream: The 64-bit stream id (default 0).
    :type stream: int
    :param position: The counter block the stream starts at (default 0).
    :type position: int

    >>> a, b = RngStream(7, 1), RngStream(7, 1)
    >>> bool(np.all(a.generator.integers(0, 100, 5) == b.generator.integers(0, 100, 5)))
    True
    """

    def __init__(self, seed: int, stream: int = 0, position: int = 0) -> None:
        self.seed = int(seed) & MASK64
        self.stream = int(stream) & MASK64
        self.position = int(position)
        if self.position < 0:
            raise ValueError("position of a stream must be non-negative ({!r})".format(position))
        bit_generator = np.random.Philox(
            key=self.seed | (self.stream << 64),
            counter=(self.position << BLOCK_SHIFT) % (1 << 256),
        )
        self._generator = np.random.Generator(bit_generator)

    @property
    def generator(self) -> np.random.Generator:
        """The underlying NumPy generator (advanced by every draw)."""
        return self._generator

    def spawn(self, stream: int) -> RngStream:
        """Return a fresh stream with the same seed and the passed stream id."""
        return RngStream(self.seed, stream)

    def binomial(self, trials: Union[np.ndarray, Sequence[int]], p: float) -> np.ndarray:
        """Draw binomial variates ``Bin(trials[i], p)``, exact in distribution (inversion for small means,
        BTPE rejection otherwise).
        """
        return self._generator.binomial(np.asarray(trials, dtype=np.int64), p)

    def __repr__(self) -> str:
        return "RngStream(seed={:d}, stream={:d}, position={:d})".format(self.seed, self.stream, self.position)


# ------------------------------------------------------------------------------------------------------------------- #
# Stateless counter-based variates
# ------------------------------------------------------------------------------------------------------------------- #


def philox4x32(counter: Sequence[np.ndarray], key: Sequence[np.ndarray]) -> tuple:
    """Vectorised Philox4x32-10 block function.

    :param counter: Four arrays of 32-bit counter words (held in ``uint64`` arrays).
    :param key: Two arrays of 32-bit key words.
    :returns: The four output words (``uint64`` arrays holding 32-bit values).
    :rtype: ``tuple``
    """
    c0, c1, c2, c3 = (np.asarray(c, dtype=np.uint64) for c in counter)
    k0, k1 = (np.asarray(k, dtype=np.uint64) for k in key)
    m0, m1 = np.uint64(PHILOX_M4x32_0), np.uint64(PHILOX_M4x32_1)
    mask, shift = np.uint64(MASK32), np.uint64(32)
    for _ in range(PHILOX_ROUNDS):
        prod0 = c0 * m0
        prod1 = c2 * m1
        c0, c1, c2, c3 = (
            ((prod1 >> shift) ^ c1 ^ k0) & mask,
            prod1 & mask,
            ((prod0 >> shift) ^ c3 ^ k1) & mask,
            prod0 & mask,
        )
        k0 = (k0 + np.uint64(PHILOX_W32_0)) & mask
        k1 = (k1 + np.uint64(PHILOX_W32_1)) & mask
    return c0, c1, c2, c3


def counter_uniforms(
    seed: Union[int, np.ndarray], stream: int, rows: Union[int, np.ndarray], cols: Union[int, np.ndarray]
) -> np.ndarray:
    """Return uniform variates in ``[0, 1)`` (53-bit resolution) that are pure functions of
    ``(seed, stream, i, k)``; ``rows`` and ``cols`` are the 1-based indices ``i`` and ``k`` (or counts,
    in which case the full grid ``1..rows`` x ``1..cols`` is returned).

    :param seed: The 64-bit seed(s); an array of seeds adds a leading axis.
    :param stream: The stream id (32 bits are used).
    :param rows: The row index array or the number of rows.
    :param cols: The column index array or the number of columns.
    :returns: The uniform variates.
    :rtype: ``numpy.ndarray``

    >>> u = counter_uniforms(3, 0, 4, 2)
    >>> u.shape, bool(np.all(u == counter_uniforms(3, 0, 4, 2)))
    ((4, 2), True)
    >>> bool(u[2, 1] == counter_uniforms(3, 0, np.array([3]), np.array([2]))[0, 0])
    True
    """
    i = np.arange(1, rows + 1, dtype=np.uint64) if np.ndim(rows) == 0 else np.asarray(rows, dtype=np.uint64)
    k = np.arange(1, cols + 1, dtype=np.uint64) if np.ndim(cols) == 0 else np.asarray(cols, dtype=np.uint64)
    if np.ndim(seed) == 0:
        seed = int(seed) & MASK64
    seeds = np.asarray(seed, dtype=np.uint64)
    grid_i, grid_k = np.meshgrid(i, k, indexing="ij")
    if seeds.ndim:
        seeds = seeds.reshape((-1, 1, 1))
    key0 = seeds & np.uint64(MASK32)
    key1 = seeds >> np.uint64(32)
    stream_word = np.uint64(int(stream) & MASK32)
    zeros = np.zeros_like(grid_i)
    c0, c1, _, _ = philox4x32(
        (grid_i, grid_k, zeros + stream_word, zeros),
        (key0 + zeros, key1 + zeros),
    )
    bits = (c0 << np.uint64(21)) | (c1 >> np.uint64(11))  # 53 random bits
    return bits.astype(np.float64) * (1.0 / (1 << 53))


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = ["RngStream", "philox4x32", "counter_uniforms"]
