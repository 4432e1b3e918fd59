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

""" Tests for code in `bulsol.export`. """

import io
import json
import math

import numpy as np
import pytest

from bulsol.export import (
    SCHEMA_VERSION,
    SCHEMAS,
    dumps_json,
    read_csv,
    read_json,
    render_svg,
    step_points,
    write_csv,
    write_json,
    write_svg,
)
from bulsol.partitions import Partition
from bulsol.shapes import LimitShape, RescaledBoundary, ScalingFactor


class TestCsv:
    def test_write(self) -> None:
        out = io.StringIO()
        write_csv(out, "chernoff", [(25.0, 5.7e-07, 0.031), (np.float64(10.0), 0.1, 1.0)])
        text = out.getvalue()
        assert "\r" not in text
        assert text.splitlines() == [
            "# bulsol chernoff v1",
            "gamma,exact_tail,bound",
            "25.0,5.7e-07,0.031",
            "10.0,0.1,1.0",
        ]

    def test_booleans(self) -> None:
        out = io.StringIO()
        row = (4, 2, "1/2", "1/2", 256, True, True, 0, 100, 0)
        write_csv(out, "domination", [row])
        assert out.getvalue().splitlines()[-1] == "4,2,1/2,1/2,256,true,true,0,100,0"

    def test_file(self, tmp_path) -> None:  # type: ignore
        path = str(tmp_path / "decay.csv")
        write_csv(path, "decay", [(1, 1000, 1000.0), (2, 990, 990.0)])
        with open(path, "rb") as fp:
            assert b"\r\n" not in fp.read()
        schema, rows = read_csv(path)
        assert schema == "decay"
        assert rows == [{"k": "1", "U": "1000", "expected": "1000.0"}, {"k": "2", "U": "990", "expected": "990.0"}]

    def test_full_precision(self) -> None:
        out = io.StringIO()
        write_csv(out, "stationary", [("(2)", 1.0 / 3.0)])
        out.seek(0)
        _, rows = read_csv(out)
        assert float(rows[0]["probability"]) == 1.0 / 3.0

    @pytest.mark.parametrize("schema, row", [("unknown", (1,)), ("traces", (1, 2)), ("decay", (1, 2, 3, 4))])
    def test_write_raises_ValueError(self, schema: str, row: tuple) -> None:
        with pytest.raises(ValueError):
            write_csv(io.StringIO(), schema, [row])

    @pytest.mark.parametrize(
        "text",
        [
            "move,N,new_pile\n1,2,3\n",
            "# bulsol traces v2\nmove,N,new_pile\n",
            "# bulsol traces v1\nmove,piles,new_pile\n",
        ],
    )
    def test_read_raises_IOError(self, text: str) -> None:
        with pytest.raises(IOError):
            read_csv(io.StringIO(text))

    def test_schemas(self) -> None:
        assert len(SCHEMAS["domination"]) == 10
        assert len(SCHEMAS["regimes"]) == 10
        assert SCHEMAS["boundary"] == ("x", "rescaled_y", "shape_y", "abs_dev")


class TestJson:
    def test_dumps(self) -> None:
        text = dumps_json({"b": np.int64(2), "a": np.array([0.5, 1.5]), "c": np.float32(0.25)})
        data = json.loads(text)
        assert data == {"a": [0.5, 1.5], "b": 2, "c": 0.25, "schema_version": SCHEMA_VERSION}
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("}\n")

    def test_dumps_raises_TypeError(self) -> None:
        with pytest.raises(TypeError):
            dumps_json({"a": object()})

    def test_file(self, tmp_path) -> None:  # type: ignore
        path = str(tmp_path / "doc.json")
        write_json(path, {"n": 2, "pi": {"(2)": 0.5}})
        assert read_json(path) == {"n": 2, "pi": {"(2)": 0.5}, "schema_version": SCHEMA_VERSION}

    def test_read_list(self) -> None:
        assert read_json(io.StringIO("[[10, 0.5, \"1/2\"]]")) == [[10, 0.5, "1/2"]]

    def test_read_raises_IOError(self) -> None:
        with pytest.raises(IOError):
            read_json(io.StringIO('{"schema_version": 99}'))


class TestSvg:
    def test_step_points(self) -> None:
        lam = Partition([3, 1])
        pts = step_points(RescaledBoundary(lam, ScalingFactor.by_first_part(lam)), 0.5)
        assert pts == [(0.0, 1.0), (0.5, 1.0)]

    def test_render(self) -> None:
        lam = Partition([5, 3, 2, 1])
        svg = render_svg(lam, ScalingFactor.by_first_part(lam), LimitShape.exponential(), title="a < b")
        assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
        assert svg.count("<polyline") == 2
        assert "a &lt; b" in svg
        assert svg.rstrip().endswith("</svg>")
        assert svg == render_svg(lam, ScalingFactor.by_first_part(lam), LimitShape.exponential(), title="a < b")

    @pytest.mark.parametrize("x_max", [0.0, -1.0, math.nan])
    def test_render_raises_ValueError(self, x_max: float) -> None:
        lam = Partition([1])
        with pytest.raises(ValueError):
            render_svg(lam, ScalingFactor.by_first_part(lam), LimitShape.triangle(), x_max)

    def test_write(self, tmp_path) -> None:  # type: ignore
        lam = Partition([4, 2])
        path = str(tmp_path / "plot.svg")
        write_svg(path, lam, ScalingFactor.by_first_part(lam), LimitShape.triangle())
        with open(path, encoding="utf-8") as fp:
            assert "<svg" in fp.read()
