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
import pytest
import numpy as np
from pathlib import Path
from typing import Callable
from edgehtl.errors import DataFormatError
from edgehtl.data import (
	read_idx_images,
	read_idx_labels,
	load_mnist
)


def _images(count: int) -> np.ndarray:
	return np.arange(count * 28 * 28).reshape(count, 28, 28) % 256


def test_read_idx_roundtrip(tmp_path: Path, write_idx: Callable):
	images = _images(3)
	write_idx(tmp_path, "train", images, np.array([7, 0, 9]))

	read = read_idx_images(tmp_path / "train-images-idx3-ubyte")
	assert read.shape == (3, 28, 28)
	assert read.min() >= 0.0 and read.max() <= 1.0
	assert np.allclose(read * 255.0, images)

	labels = read_idx_labels(tmp_path / "train-labels-idx1-ubyte")
	assert labels.tolist() == [7, 0, 9]


def test_load_mnist_shifts_labels(tmp_path: Path, write_idx: Callable):
	write_idx(tmp_path, "train", _images(4), np.array([1, 2, 3, 4]))
	write_idx(tmp_path, "t10k", _images(2), np.array([7, 0]), gz=True)

	pool, stack = load_mnist(tmp_path)
	assert len(pool) == 6
	assert pool.dim == 784
	assert pool.num_classes == 10
	assert stack.shape == (6, 28, 28)
	assert pool.y.tolist() == [2, 3, 4, 5, 8, 1]


def test_load_mnist_single_part(tmp_path: Path, write_idx: Callable):
	write_idx(tmp_path, "t10k", _images(2), np.array([7, 3]))
	pool, _ = load_mnist(tmp_path, parts=("t10k",))
	assert pool.y.tolist() == [8, 4]


def test_empty_file_is_rejected(tmp_path: Path):
	target = tmp_path / "empty-images-idx3-ubyte"
	target.write_bytes(b"")
	with pytest.raises(DataFormatError, match="empty-images-idx3-ubyte"):
		read_idx_images(target)


def test_wrong_magic_is_rejected(tmp_path: Path, write_idx: Callable):
	write_idx(tmp_path, "train", _images(1), np.array([1]))
	with pytest.raises(DataFormatError, match="magic number"):
		read_idx_labels(tmp_path / "train-images-idx3-ubyte")


def test_truncated_file_is_rejected(tmp_path: Path, write_idx: Callable):
	write_idx(tmp_path, "train", _images(2), np.array([1, 2]))
	target = tmp_path / "train-images-idx3-ubyte"
	target.write_bytes(target.read_bytes()[:-10])
	with pytest.raises(DataFormatError, match="pixels"):
		read_idx_images(target)


def test_missing_and_mismatched_files(tmp_path: Path, write_idx: Callable):
	with pytest.raises(DataFormatError, match="missing"):
		load_mnist(tmp_path)

	write_idx(tmp_path, "train", _images(2), np.array([1, 2, 3]))
	with pytest.raises(DataFormatError, match="labels for"):
		load_mnist(tmp_path, parts=("train",))
