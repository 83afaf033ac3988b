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
from dotmap import DotMap
from edgehtl.errors import ConfigurationError
from edgehtl.data import SamplePool, holdout, synth_blobs


def test_holdout_sizes_and_disjointness():
	pool = synth_blobs(k=2, d=2, per_class=50, seed=1)
	split = holdout(pool, ratio=0.3, seed=4)
	assert len(split.train) == 70
	assert len(split.test) == 30
	assert np.intersect1d(split.train_indices, split.test_indices).size == 0
	assert np.union1d(split.train_indices, split.test_indices).size == 100
	assert np.array_equal(split.test.X, pool.X[split.test_indices])


def test_holdout_is_seeded():
	pool = synth_blobs(k=2, d=2, per_class=50, seed=1)
	first, second = holdout(pool, seed=9), holdout(pool, seed=9)
	assert np.array_equal(first.test_indices, second.test_indices)
	assert not np.array_equal(first.test_indices, holdout(pool, seed=10).test_indices)


def test_test_pool_never_reaches_locations(blobs: DotMap):
	test_rows = {row.tobytes() for row in blobs.split.test.X}
	for ds in blobs.datasets:
		assert not test_rows & {row.tobytes() for row in ds.X}


@pytest.mark.parametrize("ratio", [0.0, 1.0, -0.2, 1.5])
def test_holdout_ratio_bounds(ratio: float):
	pool = SamplePool(np.zeros((4, 2)), np.array([1, 1, 2, 2]), 2)
	with pytest.raises(ConfigurationError):
		holdout(pool, ratio=ratio)
