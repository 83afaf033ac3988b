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
from pydantic import BaseModel, ConfigDict, Field
from . import errors


__all__ = ["HogConfig", "hog_features", "hog_batch"]


_CHUNK = 4096


class HogConfig(BaseModel):
	"""
	Histogram of oriented gradients layout. The defaults
	produce 6 * 6 cells * 9 bins = 324 features.
	"""
	model_config = ConfigDict(frozen=True)

	image_size: int = Field(default=28, ge=2)
	cells: int = Field(default=6, ge=1)
	bins: int = Field(default=9, ge=1)

	@property
	def dim(self) -> int:
		return self.cells * self.cells * self.bins

	def cell_edges(self) -> np.ndarray:
		return np.round(np.linspace(0, self.image_size, self.cells + 1)).astype(np.int64)


def _cell_index(config: HogConfig) -> np.ndarray:
	edges = config.cell_edges()
	pixels = np.arange(config.image_size)
	cell_of = np.searchsorted(edges, pixels, side="right") - 1
	cell_of = np.clip(cell_of, 0, config.cells - 1)
	return cell_of[:, None] * config.cells + cell_of[None, :]


def hog_batch(images: np.ndarray, config: HogConfig = None) -> np.ndarray:
	"""
	Computes HOG descriptors for a stack of gray-scale images.
	Gradients are central differences with zero borders, orientations
	are unsigned in [0, pi), votes are weighted by gradient magnitude
	and every cell histogram is L2-normalized on its own.

	:param images: Array of shape (n, size, size) with values in [0, 1].
	:param config: Cell grid and orientation bins, optional.
	:return: Array of shape (n, cells * cells * bins).
	:raises - errors.DataDimensionError: If the images are not square
		with the configured size.
	"""
	config = config or HogConfig()
	images = np.asarray(images, dtype=np.float64)
	size = config.image_size
	if images.ndim != 3 or images.shape[1:] != (size, size):
		raise errors.DataDimensionError(f"(n, {size}, {size})", images.shape)

	chunks = [
		_hog_chunk(images[start:start + _CHUNK], config)
		for start in range(0, images.shape[0], _CHUNK)
	]
	if not chunks:
		return np.zeros((0, config.dim))
	return np.vstack(chunks)


def _hog_chunk(images: np.ndarray, config: HogConfig) -> np.ndarray:
	count = images.shape[0]
	gx = np.zeros_like(images)
	gy = np.zeros_like(images)
	gx[:, :, 1:-1] = images[:, :, 2:] - images[:, :, :-2]
	gy[:, 1:-1, :] = images[:, 2:, :] - images[:, :-2, :]

	magnitude = np.hypot(gx, gy)
	angle = np.mod(np.arctan2(gy, gx), np.pi)
	bins = np.floor(angle / (np.pi / config.bins)).astype(np.int64)
	bins = np.clip(bins, 0, config.bins - 1)

	cells = config.cells * config.cells
	slot = _cell_index(config)[None, :, :] * config.bins + bins
	slot += (np.arange(count) * cells * config.bins)[:, None, None]

	hist = np.bincount(
		slot.ravel(),
		weights=magnitude.ravel(),
		minlength=count * cells * config.bins
	).reshape(count, cells, config.bins)

	norms = np.linalg.norm(hist, axis=2, keepdims=True)
	hist = np.divide(hist, norms, out=np.zeros_like(hist), where=norms > 0)
	return hist.reshape(count, -1)


def hog_features(image: np.ndarray, config: HogConfig = None) -> np.ndarray:
	"""
	:param image: A single (size, size) gray-scale image.
	:param config: Cell grid and orientation bins, optional.
	:return: The HOG descriptor of the image.
	:raises - errors.DataDimensionError: On wrong image dimensions.
	"""
	config = config or HogConfig()
	image = np.asarray(image, dtype=np.float64)
	if image.shape != (config.image_size, config.image_size):
		raise errors.DataDimensionError((config.image_size, config.image_size), image.shape)
	return hog_batch(image[None, :, :], config)[0]
