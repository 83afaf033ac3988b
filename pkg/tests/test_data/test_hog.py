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
from pydantic import ValidationError
from edgehtl.errors import DataDimensionError
from edgehtl.data import HogConfig, hog_features, hog_batch


def test_default_layout():
	config = HogConfig()
	assert config.dim == 324
	assert config.cell_edges().tolist() == [0, 5, 9, 14, 19, 23, 28]


def test_output_length(rng: np.random.Generator):
	image = rng.random((28, 28))
	assert hog_features(image).shape == (324,)


def test_constant_image_has_zero_descriptor():
	assert not hog_features(np.zeros((28, 28))).any()
	assert not hog_features(np.full((28, 28), 0.7)).any()


def test_bright_center_pixel_touches_adjacent_cells_only():
	image = np.zeros((28, 28))
	image[14, 14] = 1.0
	cells = hog_features(image).reshape(6, 6, 9)
	mass = np.abs(cells).sum(axis=2)

	rows, cols = np.nonzero(mass)
	assert rows.size > 0
	assert set(rows.tolist()) <= {2, 3}
	assert set(cols.tolist()) <= {2, 3}
	assert np.allclose(np.linalg.norm(cells[mass > 0], axis=1), 1.0)


def test_descriptor_is_deterministic(rng: np.random.Generator):
	image = rng.random((28, 28))
	assert np.array_equal(hog_features(image), hog_features(image.copy()))


def test_batch_matches_single_images(rng: np.random.Generator):
	images = rng.random((5, 28, 28))
	batch = hog_batch(images)
	assert batch.shape == (5, 324)
	for image, row in zip(images, batch):
		assert np.array_equal(hog_features(image), row)
	assert hog_batch(np.zeros((0, 28, 28))).shape == (0, 324)


def test_custom_grid(rng: np.random.Generator):
	config = HogConfig(image_size=16, cells=4, bins=6)
	assert hog_features(rng.random((16, 16)), config).shape == (96,)


def test_wrong_dimensions():
	with pytest.raises(DataDimensionError):
		hog_features(np.zeros((27, 28)))
	with pytest.raises(DataDimensionError):
		hog_batch(np.zeros((28, 28)))
	with pytest.raises(ValidationError):
		HogConfig(cells=0)
