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
from edgehtl.errors import DataDimensionError
from edgehtl.data import Standardizer


def test_fit_yields_unit_scale(rng: np.random.Generator):
	features = rng.normal(3.0, 5.0, size=(200, 4))
	scaler = Standardizer.fit(features)
	scaled = scaler.transform(features)
	assert np.abs(scaled.mean(axis=0)).max() < 1e-9
	assert np.abs(scaled.std(axis=0) - 1.0).max() < 1e-9


def test_constant_feature_maps_to_zero():
	features = np.array([[1.0, 2.0], [1.0, 4.0], [1.0, 6.0]])
	scaler = Standardizer.fit(features)
	assert scaler.scale[0] == 1.0
	assert not scaler.transform(features)[:, 0].any()


def test_repeated_inexact_value_is_constant():
	features = np.column_stack([np.full(7, 0.1), np.arange(7.0)])
	scaler = Standardizer.fit(features)
	assert scaler.scale[0] == 1.0
	assert np.abs(scaler.transform(features)[:, 0]).max() < 1e-12
	raw_weights, raw_intercept = scaler.fold(np.array([1.0, 1.0]), 0.0)
	assert raw_weights[0] == 1.0
	assert np.abs(raw_weights).max() < 1e6
	assert np.isfinite(raw_intercept)


def test_fold_preserves_margins(rng: np.random.Generator):
	features = rng.normal(-2.0, 3.0, size=(50, 3))
	scaler = Standardizer.fit(features)
	weights, intercept = np.array([0.5, -1.0, 2.0]), 0.25
	expected = scaler.transform(features) @ weights + intercept
	raw_weights, raw_intercept = scaler.fold(weights, intercept)
	assert np.allclose(features @ raw_weights + raw_intercept, expected)


def test_identity_is_a_no_op(rng: np.random.Generator):
	features = rng.random((5, 3))
	assert np.array_equal(Standardizer.identity(3).transform(features), features)


def test_dimension_errors():
	with pytest.raises(DataDimensionError):
		Standardizer.fit(np.zeros((0, 3)))
	with pytest.raises(DataDimensionError):
		Standardizer.identity(3).transform(np.zeros((2, 4)))
