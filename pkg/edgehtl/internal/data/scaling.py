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
from __future__ import annotations
import numpy as np
from dataclasses import dataclass
from . import errors


__all__ = ["Standardizer"]


@dataclass(frozen=True, eq=False)
class Standardizer:
	"""
	Per-feature z-score scaling fitted on one location's data.
	Constant features keep a unit scale and map to zero.
	"""
	mean: np.ndarray
	scale: np.ndarray

	@classmethod
	def fit(cls, features: np.ndarray) -> Standardizer:
		features = np.asarray(features, dtype=np.float64)
		if features.ndim != 2 or features.shape[0] == 0:
			raise errors.DataDimensionError("(n > 0, d)", features.shape)
		mean = features.mean(axis=0)
		scale = features.std(axis=0)
		scale[np.ptp(features, axis=0) == 0.0] = 1.0
		return cls(mean=mean, scale=scale)

	@classmethod
	def identity(cls, dim: int) -> Standardizer:
		return cls(mean=np.zeros(dim), scale=np.ones(dim))

	def transform(self, features: np.ndarray) -> np.ndarray:
		features = np.asarray(features, dtype=np.float64)
		if features.shape[-1] != self.mean.shape[0]:
			raise errors.DataDimensionError(self.mean.shape[0], features.shape[-1])
		return (features - self.mean) / self.scale

	def fold(self, weights: np.ndarray, intercept: float) -> tuple[np.ndarray, float]:
		"""
		Rewrites a linear function of standardized features as
		the same function of raw features.

		:param weights: Coefficients acting on standardized features.
		:param intercept: Bias acting on standardized features.
		:return: The equivalent raw-space weights and intercept.
		"""
		raw_weights = np.asarray(weights, dtype=np.float64) / self.scale
		raw_intercept = float(intercept - raw_weights @ self.mean)
		return raw_weights, raw_intercept
