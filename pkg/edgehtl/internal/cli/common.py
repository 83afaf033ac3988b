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
from typing import Annotated
from typer import Option


__all__ = [
	"DryRunAtd",
	"ConfigFileAtd",
	"PresetAtd",
	"SeedAtd",
	"RunsAtd",
	"OutDirAtd",
	"ThreadsAtd",
	"PlotsAtd"
]


DryRunAtd = Annotated[bool, Option(
	"--dry-run", "-D", show_default=False, help=""
	"Skips actual file operations. Useful for testing purposes."
)]

ConfigFileAtd = Annotated[str, Option(
	"--config", "-c", show_default=False, help=""
	"Either an absolute or a relative path to a YAML experiment config file. "
	"If the path is relative, it is evaluated from the Current Working Directory."
)]

PresetAtd = Annotated[str, Option(
	"--preset", "-p", show_default=False, help=""
	"Name of a bundled experiment preset, used instead of --config."
)]

SeedAtd = Annotated[int, Option(
	"--seed", "-s", show_default=False, help=""
	"Base seed of the experiment, overrides the config file."
)]

RunsAtd = Annotated[int, Option(
	"--runs", "-r", show_default=False, min=1, help=""
	"Number of independent holdout runs, overrides the config file."
)]

OutDirAtd = Annotated[str, Option(
	"--out", "-o", show_default=False, help=""
	"Directory where the result files are written, overrides the config file. "
	"If the directory doesn't exist, it will be created with parents."
)]

ThreadsAtd = Annotated[int, Option(
	"--threads", "-t", show_default=False, min=1, help=""
	"Number of worker threads for node-local training."
)]

PlotsAtd = Annotated[bool, Option(
	"--plots", "-P", show_default=False, help=""
	"Renders PNG figures into the figures subdirectory. Needs matplotlib."
)]
