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
import numpy as np
import pandas as pd
from pathlib import Path
from typing import Sequence
from ..errors import InvalidArgsError
from .common import LocalDataset


__all__ = ["datasets_to_frame", "export_csv"]


def datasets_to_frame(datasets: Sequence[LocalDataset]) -> pd.DataFrame:
	if not datasets:
		raise InvalidArgsError("Nothing to export.")
	dim = datasets[0].dim
	frames = []
	for ds in datasets:
		frame = pd.DataFrame(ds.X, columns=[f"f{i}" for i in range(1, dim + 1)])
		frame["label"] = ds.y
		frame["location"] = np.full(ds.n_l, ds.location_id)
		frames.append(frame)
	return pd.concat(frames, ignore_index=True)


def export_csv(datasets: Sequence[LocalDataset], path: str | Path) -> Path:
	"""
	Writes local datasets to one CSV file with the header
	`f1..fd,label,location`.

	:param datasets: The datasets to export.
	:param path: Target CSV file, parent directories are created.
	:return: The path that was written.
	"""
	path = Path(path)
	path.parent.mkdir(parents=True, exist_ok=True)
	datasets_to_frame(datasets).to_csv(path, index=False)
	return path
