#
#   MIT License
#
#   Copyright (c) 2024, Mattias Aabmets
#
#   The contents of this file are subject to the terms and conditions defined in the License.
#   You may not use, modify, or distribute this file except in compliance with the License.
#
#   SPDX-License-Identifier: MIT
#
import pytest
from pathlib import Path
from rich.table import Table
from edgehtl.internal.experiment.tables import (
	format_value,
	reconciliation_table,
	render_figures,
	score_table
)
from edgehtl.experiment import report_tables


@pytest.fixture(name="summary")
def fixture_summary() -> dict:
	return {
		"f_measure": [
			dict(procedure="gtl", step="h0", mean=0.81, half_width=0.02, n=6),
			dict(procedure="gtl", step="h4_mean", mean=0.93, half_width=0.01, n=6)
		],
		"ppg": [],
		"overhead": [dict(run=0, procedure="gtl", s=3, messages=36, count=180.0, cloud=450.0, gain=0.6)],
		"reconciliation": [dict(run=0, procedure="gtl", phase="total", metered=180.0, predicted=180.0, residual=0.0, exact=True)],
		"dynamic": [
			dict(run=0, procedure="dyn_nohtl", phase=0, nodes=2, count=30.0, dyn_g=0.0, cloud=80.0, gain=0.625, exact=True),
			dict(run=0, procedure="dyn_nohtl", phase=1, nodes=1, count=15.0, dyn_g=0.0, cloud=40.0, gain=0.625, exact=True)
		]
	}


@pytest.mark.parametrize("value, expected", [
	(None, "-"),
	(float("nan"), "-"),
	(True, "yes"),
	(False, "no"),
	(0.123456, "0.1235"),
	(1234567.0, "1,234,567"),
	(42, "42"),
	("gtl", "gtl")
])
def test_format_value(value, expected: str):
	assert format_value(value) == expected


def test_report_tables(summary: dict):
	tables = report_tables(summary)
	assert all(isinstance(table, Table) for table in tables)
	assert len(tables) == 4
	assert tables[0].row_count == 2

	table = score_table(summary)
	assert [column.header for column in table.columns] == ["procedure", "step", "mean", "half_width", "n"]

	table = reconciliation_table(summary)
	assert table.row_count == 1
	assert table.columns[-1].header == "exact"


def test_report_tables_without_extras():
	tables = report_tables({"f_measure": []})
	assert len(tables) == 1
	assert tables[0].row_count == 0


def test_render_figures(summary: dict, tmp_path: Path):
	pytest.importorskip("matplotlib")
	written = render_figures(summary, tmp_path / "figures")
	assert [path.name for path in written] == ["f_measure.png", "dynamic_overhead.png"]
	assert all(path.stat().st_size > 0 for path in written)
