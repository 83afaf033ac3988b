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
import logging
import zipfile
import urllib.error
import urllib.request
from enum import Enum
from pathlib import Path
from typer import Typer, Option
from typing import Annotated
from edgehtl.internal.data.mnist import MNIST_FILES
from edgehtl.internal.experiment.config import ENV_HAPT_PATH, ENV_MNIST_PATH
from .. import console, common as com
from . import helpers as hlp


app = Typer(
	name="fetch-data", invoke_without_command=True, help=""
	"Downloads the MNIST or HAPT dataset files into a data directory."
)


logger = logging.getLogger(__name__)

MNIST_URL = "https://ossci-datasets.s3.amazonaws.com/mnist/"
HAPT_URL = (
	"https://archive.ics.uci.edu/static/public/341/"
	"smartphone+based+recognition+of+human+activities+and+postural+transitions.zip"
)


class Dataset(str, Enum):
	MNIST = "mnist"
	HAPT = "hapt"


DatasetAtd = Annotated[Dataset, Option(
	"--dataset", "-d", show_default=False, case_sensitive=False,
	help="Which dataset to download."
)]
DataDirAtd = Annotated[str, Option(
	"--dir", "-o", show_default=False, help=""
	"Directory where to save the dataset. If the directory doesn't exist, "
	"it will be created with parents."
)]


def planned_downloads(dataset: Dataset, target_dir: Path) -> list[tuple[str, Path]]:
	if dataset == Dataset.MNIST:
		names = [f"{name}.gz" for pair in MNIST_FILES.values() for name in pair]
		return [(MNIST_URL + name, target_dir / name) for name in names]
	return [(HAPT_URL, target_dir / "hapt.zip")]


def extract_hapt(archive: Path, target_dir: Path) -> Path:
	"""
	Unpacks the HAPT archive and returns the directory that holds
	its Train and Test folders.
	"""
	with zipfile.ZipFile(archive) as zf:
		zf.extractall(target_dir)
	for candidate in sorted(target_dir.rglob("X_train.txt")):
		return candidate.parent.parent
	console.raise_error(f"The archive [italic tan]{archive.name}[/] holds no HAPT training data.")


@app.callback()
def command_fetch_data(dataset: DatasetAtd, directory: DataDirAtd, dry_run: com.DryRunAtd = False) -> None:
	console.notify_dry_run(dry_run)
	target_dir = hlp.resolve_directory(directory)
	downloads = planned_downloads(dataset, target_dir)

	if dry_run:
		console.styled_print("EdgeHTL would have downloaded these files:")
		console.pretty_print([f"{url} -> {path.as_posix()}" for url, path in downloads])
		return

	_download(downloads)
	data_dir = target_dir
	if dataset == Dataset.HAPT:
		data_dir = extract_hapt(downloads[0][1], target_dir)
	env = ENV_MNIST_PATH if dataset == Dataset.MNIST else ENV_HAPT_PATH
	console.styled_print(f"Point [bold]{env}[/] or dataset.path at [italic tan]{data_dir}")
	console.print_success()


def _download(downloads: list[tuple[str, Path]]) -> None:  # pragma: no cover
	for url, path in downloads:
		path.parent.mkdir(parents=True, exist_ok=True)
		console.styled_print(f"Downloading [italic sky_blue2]{path.name}[/]")
		logger.info("Fetching %s", url)
		try:
			urllib.request.urlretrieve(url, path)
		except (urllib.error.URLError, OSError) as ex:
			console.raise_error(f"Download of {url} failed: {ex}")
