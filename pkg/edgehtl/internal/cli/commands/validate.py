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
from .. import console, common as com
from . import helpers as hlp


app = Typer(
	name="validate", invoke_without_command=True, help=""
	"Checks an experiment config file or preset without running it."
)


@app.callback()
def command_validate(config: com.ConfigFileAtd = None, preset: com.PresetAtd = None) -> None:
	experiment = hlp.load_experiment(config, preset)
	console.styled_print(f"EdgeHTL accepted the experiment [italic sky_blue2]{experiment.name}[/]:")
	console.pretty_print(experiment.model_dump(mode="json"))
	console.print_success()
