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
from edgehtl.data import synth_blobs, LocalDataset
from edgehtl.learn import SvmConfig, train_svm


def test_sample_count_and_labels():
	pool = synth_blobs(k=3, d=4, per_class=5)
	assert len(pool) == 15
	assert pool.class_counts().tolist() == [5, 5, 5]
	assert pool.dim == 4


def test_zero_separation_shares_means():
	pool = synth_blobs(k=3, d=4, per_class=5, separation=0.0, seed=3)
	again = synth_blobs(k=3, d=4, per_class=5, separation=0.0, seed=3)
	assert np.array_equal(pool.X, again.X)
	shifted = synth_blobs(k=3, d=4, per_class=5, separation=2.0, seed=3)
	offsets = (shifted.X - pool.X).reshape(3, 5, 4)
	assert np.allclose(offsets[0], [2.0, 0.0, 0.0, 0.0])
	assert np.allclose(offsets[2], [0.0, 0.0, 2.0, 0.0])


def test_more_classes_than_dimensions():
	pool = synth_blobs(k=5, d=2, per_class=3, separation=1.0)
	assert pool.X.shape == (15, 2)


def test_large_separation_is_linearly_separable():
	pool = synth_blobs(k=2, d=3, per_class=40, separation=10.0, seed=5)
	local = LocalDataset(0, pool.X, pool.y, pool.num_classes)
	model = train_svm(local.X, local.binary_targets(1), SvmConfig(max_epochs=200))
	predicted = np.where(model.decision_function(local.X) >= 0, 1, 2)
	assert (predicted == local.y).mean() == 1.0


def test_invalid_arguments():
	with pytest.raises(ValidationError):
		synth_blobs(k=1, d=2, per_class=1)
	with pytest.raises(ValidationError):
		synth_blobs(k=2, d=2, per_class=0)
	with pytest.raises(ValidationError):
		synth_blobs(k=2, d=2, per_class=1, separation=-1.0)
