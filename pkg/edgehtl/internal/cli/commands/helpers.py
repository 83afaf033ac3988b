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
from pathlib import Path
from pydantic import ValidationError
from contextlib import contextmanager
from typing import Any, Generator, Mapping
from edgehtl.internal import utils
from edgehtl.internal.errors import ConfigurationError, EdgeHTLError
from edgehtl.internal.experiment.config import (
	ExperimentConfig,
	load_config,
	load_preset,
	override,
	require_dataset
)
from edgehtl.internal.experiment.runner import ExperimentReport
from edgehtl.internal.experiment.tables import render_figures, report_tables
from .. import console


__all__ = [
	"guarded",
	"resolve_directory",
	"load_experiment",
	"parse_values",
	"show_report",
	"write_figures",
	"write_report"
]


@contextmanager
def guarded() -> Generator[None, None, None]:
	"""Turns library errors into console errors with the CLI exit codes."""
	try:
		yield
	except (ConfigurationError, ValidationError) as ex:
		console.raise_config_error(str(ex))
	except EdgeHTLError as ex:
		console.raise_error(str(ex))


def resolve_directory(dir_arg: str | None) -> Path:
	target_dir = utils.resolve_relpath(dir_arg)
	if target_dir.is_file():
		console.raise_error(
			"The provided path is not a directory: "
			f"[italic tan]{target_dir}"
		)
	return target_dir


def load_experiment(
		config_file: str | None,
		preset: str | None,
		overrides: Mapping[str, Any] = None
) -> ExperimentConfig:
	if bool(config_file) == bool(preset):
		a, b = [f"[bold turquoise2]--{kw}[/]" for kw in ["config", "preset"]]
		console.raise_config_error(f"Provide exactly one of the {a} and {b} options.")
	with guarded():
		config = load_preset(preset) if preset else load_config(config_file)
		if overrides:
			config = override(config, overrides)
		require_dataset(config)
		return config


def parse_values(values: str) -> tuple[float, ...]:
	try:
		parsed = tuple(float(v) for v in values.split(",") if v.strip())
	except ValueError:
		console.raise_config_error(f"Sweep values must be comma-separated numbers, got [italic tan]{values}")
	if not parsed:
		console.raise_config_error("At least one sweep value is required.")
	return parsed


def show_report(summary: dict) -> None:
	for table in report_tables(summary):
		console.print_table(table)


def write_figures(summary: dict, out_dir: Path) -> None:
	with guarded():
		files = render_figures(summary, out_dir / "figures")
	console.styled_print(f"EdgeHTL rendered {len(files)} figures into [italic tan]{out_dir / 'figures'}")


def write_report(report: ExperimentReport, out_dir: Path, plots: bool, dry_run: bool) -> None:
	summary = report.summary()
	show_report(summary)
	if dry_run:
		console.styled_print("EdgeHTL would have written the results into:")
		console.pretty_print(out_dir.as_posix())
		return
	report.write(out_dir)
	if plots:
		write_figures(summary, out_dir)
	console.styled_print(f"EdgeHTL wrote the results into [italic tan]{out_dir}")
	console.print_success()
