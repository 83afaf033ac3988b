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
from typer import Typer
from rich.console import Console
from edgehtl.internal.experiment.runner import run_experiment
from .. import console, common as com
from . import helpers as hlp


app = Typer(
	name="run", invoke_without_command=True, help=""
	"Runs an experiment and writes metrics.csv, overhead.csv and summary.json."
)


@app.callback()
def command_run(
		config: com.ConfigFileAtd = None,
		preset: com.PresetAtd = None,
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
	out_dir = hlp.resolve_directory(experiment.output.dir)

	with hlp.guarded(), Console().status("Running experiment") as status:
		report = run_experiment(experiment, progress=lambda msg: status.update(f"Running {msg}"))
	hlp.write_report(report, out_dir, experiment.output.plots, dry_run)
