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
from __future__ import annotations
import math
import logging
from pathlib import Path
from rich.table import Table
from typing import Any, Iterable
from . import errors


__all__ = ["format_value", "score_table", "overhead_table", "reconciliation_table", "dynamic_table", "report_tables", "render_figures"]


logger = logging.getLogger(__name__)


def format_value(value: Any, digits: int = 4) -> str:
	if value is None or (isinstance(value, float) and math.isnan(value)):
		return "-"
	if isinstance(value, bool):
		return "yes" if value else "no"
	if isinstance(value, float):
		return f"{value:.{digits}f}" if abs(value) < 1e5 else f"{value:,.0f}"
	return str(value)


def _table(title: str, columns: Iterable[str], rows: Iterable[dict]) -> Table:
	columns = list(columns)
	table = Table(title=title, title_style="bold", header_style="bold cyan")
	for column in columns:
		table.add_column(column, justify="left" if column in ("procedure", "step", "phase", "axis") else "right")
	for row in rows:
		table.add_row(*(format_value(row.get(column)) for column in columns))
	return table


def score_table(summary: dict, metric: str = "f_measure") -> Table:
	rows = summary.get(metric, [])
	keys = [key for key in ("axis", "axis_value", "procedure", "step") if rows and key in rows[0]]
	return _table(f"{metric} (mean with 95% CI)", [*keys, "mean", "half_width", "n"], rows)


def overhead_table(summary: dict) -> Table:
	rows = summary.get("overhead", [])
	wanted = ["axis_value", "run", "procedure", "s", "messages", "count", "megabytes", "bound", "cloud", "gain", "gain_raw"]
	present = [column for column in wanted if any(column in row for row in rows)]
	return _table("Communication overhead (coefficients)", present, rows)


def reconciliation_table(summary: dict) -> Table:
	columns = ["run", "procedure", "phase", "metered", "predicted", "residual", "exact"]
	return _table("Metered vs predicted overhead", columns, summary.get("reconciliation", []))


def dynamic_table(summary: dict) -> Table:
	columns = ["run", "procedure", "phase", "nodes", "count", "dyn_g", "cloud", "gain", "exact"]
	return _table("Dynamic phases", columns, summary.get("dynamic", []))


def report_tables(summary: dict) -> list[Table]:
	tables = [score_table(summary, "f_measure")]
	if summary.get("ppg"):
		tables.append(score_table(summary, "ppg"))
	if summary.get("overhead"):
		tables.append(overhead_table(summary))
	if summary.get("reconciliation"):
		tables.append(reconciliation_table(summary))
	if summary.get("dynamic"):
		tables.append(dynamic_table(summary))
	return tables


def render_figures(summary: dict, directory: str | Path) -> list[Path]:
	"""
	Draws the F-measure per step and procedure, and the dynamic phase
	overhead when present, as PNG files.

	:raises - errors.ExperimentError: If matplotlib is not installed.
	"""
	try:
		import matplotlib
		matplotlib.use("Agg")
		from matplotlib import pyplot as plt
	except ImportError as ex:
		raise errors.ExperimentError("Figures need the optional 'plots' extra (matplotlib).") from ex

	directory = Path(directory)
	directory.mkdir(parents=True, exist_ok=True)
	written = []

	rows = summary.get("f_measure", [])
	if rows:
		fig, ax = plt.subplots(figsize=(8, 4))
		labels = [f"{row['procedure']}/{row['step']}" for row in rows]
		ax.bar(labels, [row["mean"] for row in rows], yerr=[row["half_width"] for row in rows], capsize=3)
		ax.set_ylabel("F-measure")
		ax.set_ylim(0, 1)
		ax.tick_params(axis="x", labelrotation=45)
		fig.tight_layout()
		written.append(directory / "f_measure.png")
		fig.savefig(written[-1], dpi=120)
		plt.close(fig)

	phases = summary.get("dynamic", [])
	if phases:
		fig, ax = plt.subplots(figsize=(8, 4))
		for procedure in sorted({row["procedure"] for row in phases}):
			series = [row for row in phases if row["procedure"] == procedure and row.get("run", 0) == 0]
			ax.plot([row["phase"] for row in series], [row["count"] for row in series], marker="o", label=procedure)
		ax.set_xlabel("phase")
		ax.set_ylabel("coefficients")
		ax.legend()
		fig.tight_layout()
		written.append(directory / "dynamic_overhead.png")
		fig.savefig(written[-1], dpi=120)
		plt.close(fig)

	logger.info("Rendered %d figures into %s", len(written), directory)
	return written
