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
from typer import Typer, Option
from .info import PackageInfo
from . import utils, console


app = utils.add_commands(Typer(
	name="edgehtl",
	invoke_without_command=True,
	no_args_is_help=True
))


VersionAtd = Annotated[bool, Option(
	'--version', '-v', show_default=False,
	help="Prints package version to the console and exits."
)]
InfoAtd = Annotated[bool, Option(
	'--info', '-i', show_default=False,
	help="Prints project info to the console and exits."
)]
VerboseAtd = Annotated[int, Option(
	'--verbose', '-V', count=True, show_default=False,
	help="Logs progress to the console, repeat for debug output."
)]


@app.callback()
def main(version: VersionAtd = False, info: InfoAtd = False, verbose: VerboseAtd = 0) -> None:
	utils.configure_logging(verbose)
	if version and info:
		a, b = [f"[bold turquoise2]--{kw}[/]" for kw in ["version", "info"]]
		console.raise_error(f"Cannot use {a} and {b} options simultaneously.")
	elif version:
		print(PackageInfo().Version)
	elif info:
		_print_info()


def _print_info() -> None:
	title, key, value = "#ff5fff", "#87d7d7", "#ffd787"
	console.styled_print(f"[{title}]Package Info:")
	for k, v in PackageInfo().toDict().items():
		console.styled_print(f"  [{key}]{k}: [{value}]{v}")
	console.styled_print('')
