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
import gzip
import struct
import pytest
import numpy as np
from pathlib import Path
from typing import Callable


@pytest.fixture(scope="package")
def write_idx() -> Callable:
	def closure(directory: Path, part: str, images: np.ndarray, labels: np.ndarray, gz: bool = False):
		count, rows, cols = images.shape
		image_bytes = struct.pack(">IIII", 0x00000803, count, rows, cols)
		image_bytes += images.astype(np.uint8).tobytes()
		label_bytes = struct.pack(">II", 0x00000801, labels.size)
		label_bytes += labels.astype(np.uint8).tobytes()
		suffix = ".gz" if gz else ""
		for name, raw in (
				(f"{part}-images-idx3-ubyte{suffix}", image_bytes),
				(f"{part}-labels-idx1-ubyte{suffix}", label_bytes)):
			target = directory / name
			target.write_bytes(gzip.compress(raw) if gz else raw)
		return directory
	return closure


@pytest.fixture(scope="package")
def write_hapt() -> Callable:
	def closure(directory: Path, splits: dict[str, tuple[np.ndarray, np.ndarray, np.ndarray]]):
		for split, (features, labels, subjects) in splits.items():
			folder = directory / split
			folder.mkdir(parents=True, exist_ok=True)
			suffix = split.lower()
			np.savetxt(folder / f"X_{suffix}.txt", features, fmt="%.6f")
			np.savetxt(folder / f"y_{suffix}.txt", labels, fmt="%d")
			np.savetxt(folder / f"subject_id_{suffix}.txt", subjects, fmt="%d")
		return directory
	return closure
