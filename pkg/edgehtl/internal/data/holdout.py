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
from ..errors import ConfigurationError
from .. import utils
from .common import SamplePool, HoldoutSplit


__all__ = ["holdout"]


_HOLDOUT_STAGE = 17


def holdout(pool: SamplePool, ratio: float = 0.3, seed: int = 0) -> HoldoutSplit:
	"""
	Reserves a seeded, uniformly drawn test pool of round(ratio * N)
	samples. The remaining samples form the training pool, which is
	partitioned over locations afterwards.

	:param pool: The full sample pool.
	:param ratio: Fraction of samples held out for testing.
	:param seed: Seed of the split, runs use distinct seeds.
	:return: The disjoint train and test pools.
	:raises - ConfigurationError: If `ratio` is not within (0, 1).
	"""
	if not 0.0 < ratio < 1.0:
		raise ConfigurationError(f"Holdout ratio must lie within (0, 1), got {ratio}.")

	order = utils.derive_rng(seed, _HOLDOUT_STAGE).permutation(len(pool))
	test_size = int(round(ratio * len(pool)))
	test_indices = np.sort(order[:test_size])
	train_indices = np.sort(order[test_size:])
	return HoldoutSplit(
		train=pool.subset(train_indices),
		test=pool.subset(test_indices),
		ratio=ratio,
		train_indices=train_indices,
		test_indices=test_indices
	)
