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
import math
import logging
import numpy as np
from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator
from ..data.scaling import Standardizer
from .. import utils
from .common import LinearModel, ModelKind, SourceSet, gtl_space
from .ridge import forward_selection
from . import errors


__all__ = ["GreedyTLConfig", "greedy_tl", "bag_count_for"]


logger = logging.getLogger(__name__)

MAX_BAGS = 20


class GreedyTLConfig(BaseModel):
	"""
	Settings of the sparse transfer learner. `kappa` bounds the number
	of non-null raw and source coefficients, the intercept is exempt.
	A `bag_count` of None covers the local set once, capped at 20 bags.
	"""
	model_config = ConfigDict(frozen=True, extra="forbid")

	lam: float = Field(default=1e-2, gt=0.0)
	kappa: int = Field(default=50, ge=0)
	bag_size: int = Field(default=50, gt=0)
	bag_count: Optional[int] = Field(default=None, gt=0)
	source_clip: Optional[float] = Field(default=1.0, gt=0.0)
	standardize: bool = True
	seed: int = 0
	workers: int = Field(default=1, ge=1)

	@model_validator(mode="after")
	def _check_budget(self) -> "GreedyTLConfig":
		if self.bag_size < self.kappa:
			raise ValueError(f"bag_size ({self.bag_size}) must not be smaller than kappa ({self.kappa})")
		return self


def bag_count_for(n: int, config: GreedyTLConfig) -> int:
	if config.bag_count is not None:
		return config.bag_count
	return min(MAX_BAGS, max(1, math.ceil(n / config.bag_size)))


def greedy_tl(
		features: np.ndarray,
		targets: np.ndarray,
		sources: SourceSet = None,
		config: GreedyTLConfig = None
) -> LinearModel:
	"""
	Trains a sparse target model over raw features and source margins.
	Each bag draws a random sub-sample of `bag_size` rows without
	replacement and runs regularized least-squares forward regression
	on the +1 / -1 targets, selecting up to `kappa` columns besides the
	always-present intercept. The bag models are averaged coefficient-wise.

	:param features: Local raw features of shape (n, d).
	:param targets: Binary labels encoded as +1 / -1.
	:param sources: Ordered source models, optional.
	:param config: Learner settings, optional.
	:return: A model of kind `gtl` laid out as [beta; omega; b].
	:raises - errors.NumericError: On non-finite input.
	:raises - errors.FeatureSpaceError: If the sources act on another space.
	"""
	config = config or GreedyTLConfig()
	sources = sources or SourceSet()
	features = np.asarray(features, dtype=np.float64)
	targets = np.asarray(targets, dtype=np.float64)
	n, dim = features.shape
	if n == 0:
		raise errors.LearnError("GreedyTL needs at least one local sample.")
	if targets.shape != (n,):
		raise errors.FeatureSpaceError((n,), targets.shape)
	if not (np.isfinite(features).all() and np.isfinite(targets).all()):
		raise errors.NumericError("GreedyTL training data")

	num_sources = len(sources)
	source_block = sources.features(features, config.source_clip)
	scaler = Standardizer.fit(features) if config.standardize else Standardizer.identity(dim)
	design = np.hstack([source_block, scaler.transform(features), np.ones((n, 1))])
	intercept_column = num_sources + dim
	kappa = min(config.kappa, num_sources + dim)

	bag_size = config.bag_size
	if bag_size > n:
		logger.warning("Bag size %d exceeds the %d local samples, using all of them", bag_size, n)
		bag_size = n
	bags = bag_count_for(n, config)

	def fit_bag(bag: int) -> np.ndarray:
		if bag_size == n:
			rows = np.arange(n)
		else:
			rng = utils.derive_rng(config.seed, bag)
			rows = np.sort(rng.choice(n, size=bag_size, replace=False))
		selection = forward_selection(
			design[rows], targets[rows], config.lam,
			budget=kappa, forced=(intercept_column,)
		)
		return selection.coefficients

	bag_coefficients = utils.run_parallel(fit_bag, range(bags), config.workers)
	averaged = np.mean(np.vstack(bag_coefficients), axis=0)

	betas = averaged[:num_sources]
	weights, intercept = scaler.fold(averaged[num_sources:intercept_column], averaged[intercept_column])
	return LinearModel(
		coefficients=np.concatenate([betas, weights, [intercept]]),
		kind=ModelKind.GTL,
		feature_space_id=gtl_space(dim, num_sources),
		num_sources=num_sources,
		source_clip=config.source_clip
	)
