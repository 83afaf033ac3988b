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
from typer import Typer, Option
from typing import Annotated
from edgehtl.internal import utils
from edgehtl.internal.experiment.runner import ExperimentReport
from .. import console, common as com
from . import helpers as hlp


app = Typer(
	name="report", invoke_without_command=True, help=""
	"Prints the summary tables of a finished run or sweep."
)


InDirAtd = Annotated[str, Option(
	"--in", "-n", show_default=False, help=""
	"Directory holding metrics.csv, overhead.csv and summary.json."
)]


@app.callback()
def command_report(in_dir: InDirAtd, plots: com.PlotsAtd = False) -> None:
	directory = utils.resolve_relpath(in_dir)
	with hlp.guarded():
		results = ExperimentReport.read(directory)
	console.styled_print(f"EdgeHTL results of [italic sky_blue2]{results.summary.get('name', '?')}[/]:")
	hlp.show_report(results.summary)
	if plots:
		hlp.write_figures(results.summary, directory)
