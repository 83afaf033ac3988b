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
from enum import Enum
from typer import Typer, Option
from typing import Annotated, Optional
from rich.console import Console
from edgehtl.internal.experiment.runner import run_sweep
from .. import console, common as com
from . import helpers as hlp


app = Typer(
	name="sweep", invoke_without_command=True, help=""
	"Runs an experiment once per value of one swept parameter."
)


class Axis(str, Enum):
	NUM_AGGREGATORS = "num_aggregators"
	F = "f"
	P = "p"
	S = "s"
	ALPHA = "alpha"


AxisAtd = Annotated[Optional[Axis], Option(
	"--axis", "-a", show_default=False, case_sensitive=False, help=""
	"Swept parameter: num_aggregators, f, p, s or alpha. Defaults to the config's sweep axis."
)]
ValuesAtd = Annotated[str, Option(
	"--values", "-x", show_default=False, help=""
	"Comma-separated values of the swept parameter, like 1,2,4,8."
)]


@app.callback()
def command_sweep(
		config: com.ConfigFileAtd = None,
		preset: com.PresetAtd = None,
		axis: AxisAtd = None,
		values: ValuesAtd = None,
		seed: com.SeedAtd = None,
		runs: com.RunsAtd = None,
		out: com.OutDirAtd = None,
		threads: com.ThreadsAtd = None,
		plots: com.PlotsAtd = False,
		dry_run: com.DryRunAtd = False
) -> None:
	console.notify_dry_run(dry_run)
	experiment = hlp.load_experiment(config, preset, {
		"holdout.seed": seed,
		"holdout.runs": runs,
		"output.dir": out,
		"threads": threads,
		"output.plots": plots or None
	})
	parsed = hlp.parse_values(values) if values else None
	out_dir = hlp.resolve_directory(experiment.output.dir)

	with hlp.guarded(), Console().status("Running sweep") as status:
		report = run_sweep(experiment, axis and axis.value, parsed, progress=lambda msg: status.update(f"Sweeping {msg}"))
	hlp.write_report(report, out_dir, experiment.output.plots, dry_run)
