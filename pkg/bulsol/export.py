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

""" Versioned CSV/JSON result files and self-contained SVG plots.

Every CSV file starts with a comment line ``# bulsol <schema> v<version>`` followed by the column header; all
JSON documents carry a ``schema_version`` field.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
from typing import Any, Dict, Final, Iterable, List, Sequence, TextIO, Tuple, Union

import numpy as np

from .partitions import Configuration
from .shapes import LimitShape, RescaledBoundary, ScalingFactor

# ------------------------------------------------------------------------------------------------------------------- #
# Logging
# ------------------------------------------------------------------------------------------------------------------- #

_LOGGER: Final = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------------------------- #
# Constants
# ------------------------------------------------------------------------------------------------------------------- #

SCHEMA_VERSION: Final = 1
CSV_HEADER_PATTERN: Final = r"^# bulsol (?P<schema>[\w-]+) v(?P<version>\d+)$"

# column layouts of the CSV schemas
SCHEMAS: Final = {
    "boundary": ("x", "rescaled_y", "shape_y", "abs_dev"),
    "traces": ("move", "N", "new_pile"),
    "stationary": ("state", "probability"),
    "kernel": ("from", "to", "probability"),
    "shape-mass": ("x", "epsilon", "mass"),
    "domination": (
        "a1",
        "r",
        "s",
        "q",
        "matrices",
        "exhaustive",
        "hypothesis_i",
        "violations_i",
        "hypothesis_ii",
        "violations_ii",
    ),
    "chernoff": ("gamma", "exact_tail", "bound"),
    "decay": ("k", "U", "expected"),
    "regimes": (
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
    ),
}

SVG_WIDTH: Final = 640
SVG_HEIGHT: Final = 400
SVG_MARGIN: Final = 40
SVG_CURVE_POINTS: Final = 500

PathOrStream = Union[str, TextIO]


# ------------------------------------------------------------------------------------------------------------------- #
# CSV
# ------------------------------------------------------------------------------------------------------------------- #


def _format(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def write_csv(target: PathOrStream, schema: str, rows: Iterable[Sequence[Any]]) -> None:
    """Write the rows of a CSV schema (LF line endings, decimal point, no locale).

    :param target: The file name or a text stream.
    :param schema: The name of the schema, see :data:`SCHEMAS`.
    :param rows: The rows; floats are written with full precision.
    :raises ValueError:
        Will be raised for an unknown schema or a row of wrong length.

    >>> out = io.StringIO()
    >>> write_csv(out, "traces", [(1, 120, 998)])
    >>> print(out.getvalue(), end="")
    # bulsol traces v1
    move,N,new_pile
    1,120,998
    """
    if schema not in SCHEMAS:
        raise ValueError("unknown CSV schema {!r}".format(schema))
    columns = SCHEMAS[schema]
    if isinstance(target, str):
        with open(target, mode="w", encoding="utf-8", newline="") as fp:
            write_csv(fp, schema, rows)
        _LOGGER.info("wrote %s CSV file %r", schema, target)
        return
    target.write("# bulsol {} v{:d}\n".format(schema, SCHEMA_VERSION))
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        if len(row) != len(columns):
            raise ValueError("row {!r} does not match the columns of schema {!r}".format(row, schema))
        writer.writerow([_format(v) for v in row])


def read_csv(source: PathOrStream) -> Tuple[str, List[Dict[str, str]]]:
    """Read a CSV file written by :func:`write_csv`.

    :returns: The schema name and the rows as dictionaries of strings.
    :rtype: ``tuple`` ( str, list )
    :raises IOError:
        Will be raised for a missing or malformed header.
    """
    if isinstance(source, str):
        with open(source, encoding="utf-8", newline="") as fp:
            return read_csv(fp)
    m = re.match(CSV_HEADER_PATTERN, source.readline().rstrip("\n"))
    if not m:
        raise IOError("missing 'bulsol' schema line")
    if int(m.group("version")) != SCHEMA_VERSION:
        raise IOError("unsupported schema version {!r}".format(m.group("version")))
    reader = csv.DictReader(source)
    schema = m.group("schema")
    if schema in SCHEMAS and tuple(reader.fieldnames or ()) != SCHEMAS[schema]:
        raise IOError("unexpected columns {!r} for schema {!r}".format(reader.fieldnames, schema))
    return schema, [dict(row) for row in reader]


# ------------------------------------------------------------------------------------------------------------------- #
# JSON
# ------------------------------------------------------------------------------------------------------------------- #


def _json_default(obj: Any) -> Any:
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError("object of type {} is not JSON serializable".format(type(obj).__name__))


def dumps_json(data: Dict[str, Any]) -> str:
    """Serialize a document deterministically (sorted keys); ``schema_version`` is added if missing.

    >>> dumps_json({"b": 1, "a": [0.5]})
    '{\\n  "a": [\\n    0.5\\n  ],\\n  "b": 1,\\n  "schema_version": 1\\n}\\n'
    """
    document = dict(data)
    document.setdefault("schema_version", SCHEMA_VERSION)
    return json.dumps(document, indent=2, sort_keys=True, default=_json_default) + "\n"


def write_json(target: PathOrStream, data: Dict[str, Any]) -> None:
    """Write a JSON document, see :func:`dumps_json`."""
    text = dumps_json(data)
    if isinstance(target, str):
        with open(target, mode="w", encoding="utf-8", newline="\n") as fp:
            fp.write(text)
        _LOGGER.info("wrote JSON file %r", target)
    else:
        target.write(text)


def read_json(source: PathOrStream) -> Any:
    """Read a JSON document.

    :raises IOError:
        Will be raised for a document with an unsupported ``schema_version``.
    """
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fp:
            return read_json(fp)
    data = json.load(source)
    if isinstance(data, dict) and data.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise IOError("unsupported schema version {!r}".format(data.get("schema_version")))
    return data


# ------------------------------------------------------------------------------------------------------------------- #
# SVG
# ------------------------------------------------------------------------------------------------------------------- #


def _polyline(points: Iterable[Tuple[float, float]], color: str, width: float) -> str:
    coords = " ".join("{:.2f},{:.2f}".format(x, y) for x, y in points)
    return '<polyline fill="none" stroke="{}" stroke-width="{:g}" points="{}"/>'.format(color, width, coords)


def step_points(boundary: RescaledBoundary, x_max: float) -> List[Tuple[float, float]]:
    """Return the vertices of the step function on :math:`[0, x_{max}]`.

    >>> from bulsol.partitions import Partition
    >>> lam = Partition([2, 1])
    >>> pts = step_points(RescaledBoundary(lam, ScalingFactor.by_first_part(lam)), 3.0)
    >>> pts[0], pts[3], pts[-1], len(pts)
    ((0.0, 1.0), (1.3333333333333333, 0.5), (3.0, 0.0), 6)
    """
    points = [(0.0, float(boundary.levels[0]))]
    for edge, before, after in zip(boundary.edges, boundary.levels[:-1], boundary.levels[1:]):
        if edge >= x_max:
            points.append((x_max, float(before)))
            return points
        points.append((float(edge), float(before)))
        points.append((float(edge), float(after)))
    points.append((x_max, float(boundary.levels[-1])))
    return points


def render_svg(
    config: Configuration, scaling: ScalingFactor, shape: LimitShape, x_max: float = 5.0, title: str = ""
) -> str:
    """Render the rescaled boundary (the jagged curve) and the limit shape (the smooth curve, sampled at 500
    points) as a self-contained SVG document; the output is deterministic for fixed inputs.
    """
    if not x_max > 0:
        raise ValueError("x_max must be positive ({!r})".format(x_max))
    boundary = RescaledBoundary(config, scaling)
    xs = np.linspace(0.0, x_max, SVG_CURVE_POINTS)
    ys = shape(xs)
    y_max = max(1.0, float(np.max(boundary.levels)), float(np.max(ys))) * 1.05
    plot_w, plot_h = SVG_WIDTH - 2 * SVG_MARGIN, SVG_HEIGHT - 2 * SVG_MARGIN

    def to_px(x: float, y: float) -> Tuple[float, float]:
        return SVG_MARGIN + x / x_max * plot_w, SVG_HEIGHT - SVG_MARGIN - y / y_max * plot_h

    jagged = [to_px(x, y) for x, y in step_points(boundary, x_max)]
    smooth = [to_px(float(x), float(y)) for x, y in zip(xs, ys)]
    x0, y0 = to_px(0.0, 0.0)
    x1, y1 = to_px(x_max, y_max)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="{w:d}" height="{h:d}" viewBox="0 0 {w:d} {h:d}">'.format(
            w=SVG_WIDTH, h=SVG_HEIGHT
        ),
        '<rect x="0" y="0" width="{:d}" height="{:d}" fill="white"/>'.format(SVG_WIDTH, SVG_HEIGHT),
        '<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="black"/>'.format(x0, y0, x1, y0),
        '<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="black"/>'.format(x0, y0, x0, y1),
        '<text x="{:.2f}" y="{:.2f}" font-size="12">{:g}</text>'.format(x1 - 10, y0 + 16, x_max),
        '<text x="{:.2f}" y="{:.2f}" font-size="12">{:.2f}</text>'.format(4, y1 + 4, y_max),
        _polyline(smooth, "red", 1.5),
        _polyline(jagged, "blue", 1.0),
    ]
    if title:
        escaped = title.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        lines.append('<text x="{:d}" y="{:d}" font-size="14">{}</text>'.format(SVG_MARGIN, SVG_MARGIN - 12, escaped))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(
    path: str, config: Configuration, scaling: ScalingFactor, shape: LimitShape, x_max: float = 5.0, title: str = ""
) -> None:
    """Write the plot of :func:`render_svg` to a file."""
    with open(path, mode="w", encoding="utf-8", newline="\n") as fp:
        fp.write(render_svg(config, scaling, shape, x_max, title))
    _LOGGER.info("wrote SVG plot %r", path)


# ------------------------------------------------------------------------------------------------------------------- #
# Exported symbols
# ------------------------------------------------------------------------------------------------------------------- #

__all__ = [
    "SCHEMA_VERSION",
    "SCHEMAS",
    "write_csv",
    "read_csv",
    "dumps_json",
    "write_json",
    "read_json",
    "step_points",
    "render_svg",
    "write_svg",
]
