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

""" Rescaling of diagram-boundary functions, limit shapes and shape-deviation metrics.

A configuration of ``n`` cards is downscaled with a scaling factor :math:`a_n > 0`: all row lengths are
multiplied by :math:`1/a_n` and all column heights by :math:`a_n/n`, yielding a diagram of area 1. The
resulting right-continuous step function is compared against a limit shape :math:`\\phi`.
"""

from __future__ import annotations

import enum
import logging
import math
from fractions import Fraction
from typing import Final, List, Optional, Sequence, Tuple, Union

import numpy as np

from .partitions import Configuration, ordered

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants and type aliases
# ------------------------------------------------------------------------------------------------------------------- #

ArrayLike = Union[float, Sequence[float], np.ndarray]

DEFAULT_TRIANGLE_SLOPE: Final = Fraction(1, 2)  # area-1, height-1 triangle max(0, 1 - x/2)


# ------------------------------------------------------------------------------------------------------------------- #
# Exception classes
# ------------------------------------------------------------------------------------------------------------------- #


class InvalidScalingError(ValueError):
    """Exception which is raised if a scaling factor can not be determined for a configuration.

    :param message: A detailed message describing the problem.
    :type message: str
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


# ------------------------------------------------------------------------------------------------------------------- #
# Scaling
# ------------------------------------------------------------------------------------------------------------------- #


@enum.unique
class ScalingMode(enum.Enum):
    """Supported choices of the scaling factor :math:`a_n`:

    * ``BY_FIRST_PART``  :math:`a_n = n/\\lambda_1`, the height of the diagram is scaled to 1.
    * ``THEORETICAL``    :math:`a_n = 1/(p q)`, the scaling of the exponential limit shape.
    * ``SQUARE_ROOT``    :math:`a_n = \\sqrt{n}`, the scaling of the classical p-random solitaire.
    * ``EXPLICIT``       a given value of :math:`a_n`.
    """

    BY_FIRST_PART = 1
    THEORETICAL = 2
    SQUARE_ROOT = 3
    EXPLICIT = 4

    @staticmethod
    def from_str(s: str) -> ScalingMode:
        """Create a corresponding enum representation for the passed string (e.g. ``'theoretical'``).

        :raises ValueError:
            Will be raised if the passed string does not have a corresponding enum representation.

        >>> ScalingMode.from_str("by-first-part")
        <ScalingMode.BY_FIRST_PART: 1>
        """
        try:
            return ScalingMode[s.strip().upper().replace("-", "_")]
        except KeyError:
            raise ValueError("no corresponding scaling mode ({!r})".format(s)) from None


class ScalingFactor:
    """A scaling factor :math:`a_n` together with the resulting unit height :math:`n/a_n`.

    Use the class methods :meth:`by_first_part`, :meth:`theoretical`, :meth:`square_root`, :meth:`explicit`
    or :meth:`for_config` to create an instance.

    :param mode: The scaling mode, see :class:`ScalingMode`.
    :type mode: ScalingMode
    :param value: The scaling factor :math:`a_n > 0`.
    :type value: float
    :param height: The unit height :math:`n/a_n`; a part of size ``h`` is drawn with height ``h / height``.
    :type height: float
    :raises InvalidScalingError:
        Will be raised if ``value`` or ``height`` is not positive.
    """

    __slots__ = ("mode", "value", "height")

    def __init__(self, mode: ScalingMode, value: float, height: float) -> None:
        if not (value > 0 and height > 0) or math.isinf(value) or math.isinf(height):
            raise InvalidScalingError("scaling factor must be positive and finite (a={!r})".format(value))
        self.mode = mode
        self.value = float(value)
        self.height = height

    @classmethod
    def by_first_part(cls, config: Configuration) -> ScalingFactor:
        """Scaling :math:`a_n = n/\\lambda_1` with :math:`\\lambda_1` the largest pile of the configuration.

        :raises InvalidScalingError:
            Will be raised for an empty configuration.
        """
        first = max(config.parts, default=0)
        if first <= 0:
            raise InvalidScalingError("scaling by first part requires a non-empty configuration")
        return cls(ScalingMode.BY_FIRST_PART, config.n / first, first)

    @classmethod
    def theoretical(cls, n: int, p: float, q: Union[Fraction, float]) -> ScalingFactor:
        """Scaling :math:`a_n = (p q)^{-1}` of the exponential limit shape."""
        pq = float(p) * float(q)
        return cls(ScalingMode.THEORETICAL, 1.0 / pq, n * pq)

    @classmethod
    def square_root(cls, n: int) -> ScalingFactor:
        """Scaling :math:`a_n = \\sqrt{n}`."""
        root = math.sqrt(n)
        return cls(ScalingMode.SQUARE_ROOT, root, root)

    @classmethod
    def explicit(cls, n: int, value: float) -> ScalingFactor:
        """Scaling with an explicitly given value :math:`a_n`."""
        return cls(ScalingMode.EXPLICIT, value, n / value)

    @classmethod
    def for_config(
        cls,
        mode: ScalingMode,
        config: Configuration,
        p: Optional[float] = None,
        q: Optional[Union[Fraction, float]] = None,
        value: Optional[float] = None,
    ) -> ScalingFactor:
        """Create the scaling factor of the passed mode for a configuration.

        :raises ValueError:
            Will be raised if a parameter required by the mode is missing.
        :raises InvalidScalingError:
            Will be raised if the scaling can not be determined for the configuration.
        """
        if mode is ScalingMode.BY_FIRST_PART:
            return cls.by_first_part(config)
        elif mode is ScalingMode.THEORETICAL:
            if p is None or q is None:
                raise ValueError("theoretical scaling requires the parameters 'p' and 'q'")
            return cls.theoretical(config.n, p, q)
        elif mode is ScalingMode.SQUARE_ROOT:
            return cls.square_root(config.n)
        if value is None:
            raise ValueError("explicit scaling requires a 'value'")
        return cls.explicit(config.n, value)

    def __repr__(self) -> str:
        return "ScalingFactor({},a={!r},height={!r})".format(self.mode.name, self.value, self.height)


class RescaledBoundary:
    """The rescaled diagram-boundary function :math:`x \\mapsto (a_n/n)\\,\\partial\\alpha(a_n x)` of a configuration.

    The function is a right-continuous step function with jumps at :math:`x = j/a_n`, ``j = 1..len(parts)``,
    and vanishes beyond the last stored part.

    :param config: The partition or weak composition.
    :type config: Partition or WeakComposition
    :param scaling: The scaling factor.
    :type scaling: ScalingFactor

    >>> from bulsol.partitions import Partition
    >>> lam = Partition([4, 3, 2, 1])
    >>> f = RescaledBoundary(lam, ScalingFactor.by_first_part(lam))
    >>> float(f(0.0)), float(f(0.5))
    (1.0, 0.75)
    """

    def __init__(self, config: Configuration, scaling: ScalingFactor) -> None:
        self.scaling = scaling
        parts = np.asarray(config.parts, dtype=float)
        self.levels: np.ndarray = np.append(parts / scaling.height, 0.0)
        self.edges: np.ndarray = np.arange(1, len(parts) + 1, dtype=float) / scaling.value

    def __call__(self, x: ArrayLike) -> np.ndarray:
        xs = np.asarray(x, dtype=float)
        if np.any(xs < 0):
            raise ValueError("the position must be non-negative")
        return self.levels[np.searchsorted(self.edges, xs, side="right")]

    def left_limit(self, x: ArrayLike) -> np.ndarray:
        """Return the left limits :math:`f(x^-)` (the value at ``x`` for ``x = 0``)."""
        xs = np.asarray(x, dtype=float)
        return self.levels[np.searchsorted(self.edges, xs, side="left")]

    @property
    def support_end(self) -> float:
        """The position beyond which the function vanishes."""
        return float(self.edges[-1]) if len(self.edges) else 0.0

    def area(self) -> float:
        """Return the area below the function (1 for every configuration and scaling)."""
        return float(np.sum(self.levels[:-1])) / self.scaling.value


def rescaled_boundary(config: Configuration, n: int, a: ScalingFactor, x: ArrayLike) -> np.ndarray:
    """Evaluate the rescaled diagram-boundary function :math:`(a/n)\\,\\partial\\alpha(a x)`.

    :param config: The partition or weak composition of ``n`` cards.
    :param n: The total number of cards.
    :type n: int
    :param a: The scaling factor.
    :type a: ScalingFactor
    :param x: The non-negative position(s).
    :returns: The value(s) of the rescaled diagram-boundary function.
    :rtype: ``numpy.ndarray``
    :raises ValueError:
        Will be raised for a negative position or if ``n`` does not match the configuration.
    """
    if config.n != n:
        raise ValueError("configuration holds {:d} cards, expected {:d}".format(config.n, n))
    return RescaledBoundary(config, a)(x)


def area(config: Configuration, n: int, a: ScalingFactor) -> float:
    """Return the area below the rescaled diagram-boundary function (1 up to rounding).

    >>> from bulsol.partitions import WeakComposition
    >>> round(area(WeakComposition([0, 3, 0, 2]), 5, ScalingFactor.square_root(5)), 12)
    1.0
    """
    if config.n != n:
        raise ValueError("configuration holds {:d} cards, expected {:d}".format(config.n, n))
    return RescaledBoundary(config, a).area()


# ------------------------------------------------------------------------------------------------------------------- #
# Limit shapes
# ------------------------------------------------------------------------------------------------------------------- #


@enum.unique
class ShapeKind(enum.Enum):
    """Supported kinds of limit shapes:

    * ``EXPONENTIAL``  :math:`e^{-x}`.
    * ``TRIANGLE``     the area-1 triangle :math:`\\max(0, \\sqrt{2c} - c x)` of slope ``c`` (default 1/2).
    * ``TABULATED``    linear interpolation of a grid of samples, zero beyond the grid.
    * ``STEP``         right-continuous, piecewise constant function, zero beyond the last breakpoint.
    """

    EXPONENTIAL = 1
    TRIANGLE = 2
    TABULATED = 3
    STEP = 4


class LimitShape:
    """A non-negative, weakly decreasing candidate limit shape :math:`\\phi` on :math:`[0, \\infty)`.

    Use the class methods :meth:`exponential`, :meth:`triangle`, :meth:`tabulated`, :meth:`step` or
    :meth:`from_str` to create an instance.

    >>> round(float(LimitShape.exponential()(1.0)), 6)
    0.367879
    >>> float(LimitShape.triangle()(2.0))
    0.0
    """

    def __init__(
        self,
        kind: ShapeKind,
        slope: Optional[Fraction] = None,
        xs: Optional[np.ndarray] = None,
        ys: Optional[np.ndarray] = None,
    ) -> None:
        self.kind = kind
        self.slope = slope
        self._xs = xs
        self._ys = ys

    @classmethod
    def exponential(cls) -> LimitShape:
        return cls(ShapeKind.EXPONENTIAL)

    @classmethod
    def triangle(cls, slope: Union[Fraction, float] = DEFAULT_TRIANGLE_SLOPE) -> LimitShape:
        """The area-1 triangle of the passed slope; the default slope 1/2 yields :math:`\\max(0, 1 - x/2)`.

        :raises ValueError:
            Will be raised for a non-positive slope.
        """
        if not slope > 0:
            raise ValueError("slope of the triangle must be positive ({!r})".format(slope))
        return cls(ShapeKind.TRIANGLE, slope=Fraction(slope))

    @classmethod
    def tabulated(cls, xs: Sequence[float], ys: Sequence[float]) -> LimitShape:
        """Tabulated shape; the grid must be strictly increasing and the samples non-negative and weakly decreasing.

        :raises ValueError:
            Will be raised for an invalid grid or invalid samples.
        """
        gx, gy = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
        if gx.ndim != 1 or gx.shape != gy.shape or len(gx) == 0:
            raise ValueError("tabulated shape requires two non-empty sequences of equal length")
        if np.any(gx < 0) or np.any(np.diff(gx) <= 0):
            raise ValueError("grid of a tabulated shape must be non-negative and strictly increasing")
        if np.any(gy < 0) or np.any(np.diff(gy) > 0):
            raise ValueError("samples of a tabulated shape must be non-negative and weakly decreasing")
        return cls(ShapeKind.TABULATED, xs=gx, ys=gy)

    @classmethod
    def step(cls, breakpoints: Sequence[float], values: Sequence[float]) -> LimitShape:
        """Step shape with value ``values[i]`` on ``[breakpoints[i], breakpoints[i+1])`` (``breakpoints[0] == 0``)
        and zero from ``breakpoints[-1]`` on.

        :raises ValueError:
            Will be raised for invalid breakpoints or values.
        """
        bx, by = np.asarray(breakpoints, dtype=float), np.asarray(values, dtype=float)
        if len(bx) != len(by) + 1 or len(by) == 0 or bx[0] != 0 or np.any(np.diff(bx) <= 0):
            raise ValueError("step shape requires breakpoints 0 = b_0 < ... < b_m and m values")
        if np.any(by < 0) or np.any(np.diff(by) > 0):
            raise ValueError("values of a step shape must be non-negative and weakly decreasing")
        return cls(ShapeKind.STEP, xs=bx, ys=by)

    @classmethod
    def from_str(cls, s: str) -> LimitShape:
        """Create a shape by name: ``'exp'``, ``'triangle'`` or ``'triangle:<slope>'``.

        :raises ValueError:
            Will be raised for an unknown name.
        """
        name, _, arg = s.strip().lower().partition(":")
        if name in ("exp", "exponential"):
            return cls.exponential()
        if name in ("tri", "triangle"):
            return cls.triangle(Fraction(arg) if arg else DEFAULT_TRIANGLE_SLOPE)
        raise ValueError("unknown limit shape {!r}; expected 'exp' or 'triangle[:slope]'".format(s))

    @property
    def label(self) -> str:
        """A short name of the shape."""
        if self.kind is ShapeKind.TRIANGLE and self.slope != DEFAULT_TRIANGLE_SLOPE:
            return "triangle:{}".format(self.slope)
        return {ShapeKind.EXPONENTIAL: "exp", ShapeKind.TRIANGLE: "triangle"}.get(self.kind, self.kind.name.lower())

    def breakpoints(self) -> np.ndarray:
        """Return the positions where the shape may jump or changes its formula."""
        if self.kind is ShapeKind.TRIANGLE:
            assert self.slope is not None
            return np.array([math.sqrt(2.0 / float(self.slope))])
        if self.kind in (ShapeKind.TABULATED, ShapeKind.STEP):
            assert self._xs is not None
            return self._xs
        return np.empty(0)

    def __call__(self, x: ArrayLike) -> np.ndarray:
        """Evaluate the shape (right-continuous values)."""
        xs = np.asarray(x, dtype=float)
        if self.kind is ShapeKind.EXPONENTIAL:
            return np.exp(-xs)
        if self.kind is ShapeKind.TRIANGLE:
            assert self.slope is not None
            c = float(self.slope)
            return np.maximum(0.0, math.sqrt(2.0 * c) - c * xs)
        assert self._xs is not None and self._ys is not None
        if self.kind is ShapeKind.TABULATED:
            return np.where(xs > self._xs[-1], 0.0, np.interp(xs, self._xs, self._ys))
        levels = np.append(self._ys, 0.0)
        return levels[np.searchsorted(self._xs, xs, side="right") - 1]

    def left_limit(self, x: ArrayLike) -> np.ndarray:
        """Return the left limits :math:`\\phi(x^-)` (the value at ``x`` for ``x = 0``)."""
        xs = np.asarray(x, dtype=float)
        if self.kind is ShapeKind.STEP:
            assert self._xs is not None and self._ys is not None
            levels = np.append(self._ys, 0.0)
            return levels[np.maximum(np.searchsorted(self._xs, xs, side="left") - 1, 0)]
        if self.kind is ShapeKind.TABULATED:
            assert self._xs is not None and self._ys is not None
            return np.where(xs > self._xs[-1], 0.0, np.interp(xs, self._xs, self._ys))
        return self(xs)

    def right_limit(self, x: ArrayLike) -> np.ndarray:
        """Return the right limits :math:`\\phi(x^+)`."""
        xs = np.asarray(x, dtype=float)
        if self.kind is ShapeKind.TABULATED:
            assert self._xs is not None
            return np.where(xs >= self._xs[-1], 0.0, self(xs))
        return self(xs)

    def __repr__(self) -> str:
        return "LimitShape({})".format(self.label)


def shape_eval(phi: LimitShape, x: float) -> float:
    """Evaluate the limit shape :math:`\\phi` at a non-negative position.

    :raises ValueError:
        Will be raised for a negative position.

    >>> shape_eval(LimitShape.exponential(), 0.0)
    1.0
    """
    if not x >= 0:
        raise ValueError("the position must be non-negative ({!r})".format(x))
    return float(phi(x))


# ------------------------------------------------------------------------------------------------------------------- #
# Deviation metrics
# ------------------------------------------------------------------------------------------------------------------- #


class DeviationReport:
    """Deviation of a rescaled diagram-boundary function from a limit shape.

    :param pointwise: The pairs ``(x, |f(x) - phi(x)|)`` at the grid points.
    :param sup_on_interval: The supremum of the deviation on ``interval``.
    :param interval: The interval ``(a, b)`` of the supremum.
    :param epsilon: The tolerance used for :attr:`fraction_within`.
    :param fraction_within: The fraction of grid points with a deviation below ``epsilon``.
    """

    def __init__(
        self,
        pointwise: List[Tuple[float, float]],
        sup_on_interval: float,
        interval: Tuple[float, float],
        epsilon: float,
        fraction_within: float,
    ) -> None:
        self.pointwise = pointwise
        self.sup_on_interval = sup_on_interval
        self.interval = interval
        self.epsilon = epsilon
        self.fraction_within = fraction_within

    def to_json(self) -> dict:
        return {
            "sup": self.sup_on_interval,
            "fraction_within": self.fraction_within,
            "epsilon": self.epsilon,
            "interval": list(self.interval),
        }

    def __repr__(self) -> str:
        return "DeviationReport(sup={:.6g} on [{:g},{:g}], within({:g})={:.3f})".format(
            self.sup_on_interval, self.interval[0], self.interval[1], self.epsilon, self.fraction_within
        )


def sup_distance(
    config: Configuration,
    a: ScalingFactor,
    phi: LimitShape,
    interval: Tuple[float, float] = (0.0, math.inf),
) -> float:
    """Return the exact supremum of :math:`|\\tilde\\partial\\alpha(x) - \\phi(x)|` over ``interval``.

    The rescaled boundary is constant between its jumps and the shape is monotone between its breakpoints,
    so the supremum is attained among the one-sided limits at the merged breakpoints of both functions.

    :param config: The partition or weak composition.
    :param a: The scaling factor.
    :param phi: The limit shape.
    :param interval: The closed interval ``(lo, hi)``; ``hi`` may be ``math.inf``.
    :returns: The supremum of the deviation.
    :rtype: ``float``
    :raises ValueError:
        Will be raised for an invalid interval.
    """
    lo, hi = interval
    if not (0 <= lo <= hi):
        raise ValueError("invalid interval [{!r}, {!r}]".format(lo, hi))
    f = RescaledBoundary(config, a)
    candidates = np.concatenate(([lo], f.edges, phi.breakpoints(), [] if math.isinf(hi) else [hi]))
    points = np.unique(candidates[(candidates >= lo) & (candidates <= hi)])
    # values at the points themselves
    sup = float(np.max(np.abs(f(points) - phi(points))))
    if len(points) > 1:
        starts, ends = points[:-1], points[1:]
        level = f((starts + ends) / 2.0)  # constant on each open piece
        sup = max(
            sup,
            float(np.max(np.abs(level - phi.right_limit(starts)))),
            float(np.max(np.abs(level - phi.left_limit(ends)))),
        )
    if math.isinf(hi):
        # beyond the last point the boundary is constant and the shape decays to zero
        last = points[-1:]
        level = f(last)
        sup = max(sup, float(np.max(np.abs(level - phi.right_limit(last)))), float(np.max(level)))
    return sup


def deviation(
    config: Configuration,
    n: int,
    a: ScalingFactor,
    phi: LimitShape,
    grid: Union[Sequence[float], np.ndarray],
    interval: Tuple[float, float],
    epsilon: float,
) -> DeviationReport:
    """Compute the pointwise and supremum deviation of the rescaled boundary from a limit shape.

    :param config: The partition or weak composition of ``n`` cards.
    :param n: The total number of cards.
    :param a: The scaling factor.
    :param phi: The limit shape.
    :param grid: The non-empty, strictly increasing, non-negative grid of positions.
    :param interval: The interval ``(a, b)`` of the supremum.
    :param epsilon: The positive tolerance for :attr:`DeviationReport.fraction_within`.
    :returns: The deviation report.
    :rtype: ``DeviationReport``
    :raises ValueError:
        Will be raised for an invalid grid, interval or tolerance.
    """
    xs = np.asarray(grid, dtype=float)
    if xs.ndim != 1 or len(xs) == 0 or np.any(xs < 0) or np.any(np.diff(xs) <= 0):
        raise ValueError("grid must be non-empty, non-negative and strictly increasing")
    if not epsilon > 0:
        raise ValueError("tolerance must be positive ({!r})".format(epsilon))
    lo, hi = interval
    if lo > hi or lo < 0:
        raise ValueError("invalid interval [{!r}, {!r}]".format(lo, hi))
    dev = np.abs(rescaled_boundary(config, n, a, xs) - phi(xs))
    inside = (xs >= lo) & (xs <= hi)
    sup = sup_distance(config, a, phi, (lo, hi))
    if np.any(inside):
        sup = max(sup, float(np.max(dev[inside])))
    return DeviationReport(
        pointwise=[(float(x), float(d)) for x, d in zip(xs, dev)],
        sup_on_interval=sup,
        interval=(float(lo), float(hi)),
        epsilon=float(epsilon),
        fraction_within=float(np.mean(dev < epsilon)),
    )


def sorted_and_unsorted_sup(
    config: Configuration, a: ScalingFactor, phi: LimitShape, interval: Tuple[float, float]
) -> Tuple[float, float]:
    """Return the supremum deviations of the sorted partition and of the configuration as given."""
    return sup_distance(ordered(config), a, phi, interval), sup_distance(config, a, phi, interval)


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "InvalidScalingError",
    "ScalingMode",
    "ScalingFactor",
    "RescaledBoundary",
    "rescaled_boundary",
    "area",
    "ShapeKind",
    "LimitShape",
    "shape_eval",
    "DeviationReport",
    "sup_distance",
    "deviation",
    "sorted_and_unsorted_sup",
]
