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
import logging
import numpy as np
from pathlib import Path
from .common import SamplePool
from . import errors


__all__ = [
	"MNIST_FILES",
	"IMAGES_MAGIC",
	"LABELS_MAGIC",
	"read_idx_images",
	"read_idx_labels",
	"load_mnist"
]


logger = logging.getLogger(__name__)

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801

MNIST_FILES = {
	"train": ("train-images-idx3-ubyte", "train-labels-idx1-ubyte"),
	"t10k": ("t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte")
}


def _read_bytes(file: Path) -> bytes:
	try:
		if file.suffix == ".gz":
			with gzip.open(file, "rb") as handle:
				return handle.read()
		return file.read_bytes()
	except (OSError, EOFError) as ex:
		raise errors.DataFormatError(file, f"cannot be read ({ex})")


def _header(raw: bytes, file: Path, magic: int, fields: int) -> np.ndarray:
	size = 4 * (fields + 1)
	if len(raw) < size:
		raise errors.DataFormatError(file, "header is truncated")
	header = np.frombuffer(raw, dtype=">u4", count=fields + 1)
	if int(header[0]) != magic:
		raise errors.DataFormatError(
			file, f"magic number {int(header[0]):#010x} does not match {magic:#010x}"
		)
	return header[1:].astype(np.int64)


def read_idx_images(file: str | Path) -> np.ndarray:
	"""
	Reads an IDX image file, plain or gzipped.

	:param file: Path to an `idx3-ubyte` file.
	:return: Array of shape (n, rows, cols) with pixel values in [0, 1].
	:raises - errors.DataFormatError: On a wrong magic number or truncated data.
	"""
	file = Path(file)
	raw = _read_bytes(file)
	count, rows, cols = _header(raw, file, IMAGES_MAGIC, fields=3)
	expected = int(count * rows * cols)
	pixels = np.frombuffer(raw, dtype=np.uint8, offset=16)
	if pixels.size != expected:
		raise errors.DataFormatError(file, f"expected {expected} pixels, found {pixels.size}")
	return pixels.reshape(count, rows, cols).astype(np.float64) / 255.0


def read_idx_labels(file: str | Path) -> np.ndarray:
	"""
	Reads an IDX label file, plain or gzipped.

	:param file: Path to an `idx1-ubyte` file.
	:return: Array of shape (n,) with the raw digit labels.
	:raises - errors.DataFormatError: On a wrong magic number or truncated data.
	"""
	file = Path(file)
	raw = _read_bytes(file)
	(count,) = _header(raw, file, LABELS_MAGIC, fields=1)
	labels = np.frombuffer(raw, dtype=np.uint8, offset=8)
	if labels.size != count:
		raise errors.DataFormatError(file, f"expected {count} labels, found {labels.size}")
	return labels.astype(np.int64)


def _locate(directory: Path, name: str) -> Path:
	for candidate in (directory / name, directory / f"{name}.gz"):
		if candidate.is_file():
			return candidate
	raise errors.DataFormatError(directory / name, "file is missing")


def load_mnist(path: str | Path, parts: tuple[str, ...] = ("train", "t10k")) -> tuple[SamplePool, np.ndarray]:
	"""
	Loads the MNIST digits from a directory holding the official IDX files.
	Digit labels 0..9 become classes 1..10.

	:param path: Directory with the IDX files, gzipped or not.
	:param parts: Which official splits to concatenate, in order.
	:return: A tuple of the raw pixel pool (d = rows * cols) and
		the image stack of shape (n, rows, cols).
	:raises - errors.DataFormatError: If any file is missing or malformed.
	"""
	directory = Path(path)
	images, labels = [], []
	for part in parts:
		image_name, label_name = MNIST_FILES[part]
		image_file = _locate(directory, image_name)
		label_file = _locate(directory, label_name)
		part_images = read_idx_images(image_file)
		part_labels = read_idx_labels(label_file)
		if part_images.shape[0] != part_labels.shape[0]:
			raise errors.DataFormatError(
				label_file, f"{part_labels.shape[0]} labels for {part_images.shape[0]} images"
			)
		if part_labels.size and part_labels.max() > 9:
			raise errors.DataFormatError(label_file, "labels outside of 0..9")
		images.append(part_images)
		labels.append(part_labels)

	stack = np.concatenate(images)
	pool = SamplePool(
		X=stack.reshape(stack.shape[0], -1),
		y=np.concatenate(labels) + 1,
		num_classes=10
	)
	logger.info("Loaded %d MNIST images from %s", len(pool), directory)
	return pool, stack
