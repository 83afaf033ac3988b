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
import logging
import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from ..data.scaling import Standardizer
from .common import LinearModel, ModelKind
from . import errors


__all__ = ["SvmConfig", "train_svm", "hinge_objective"]


logger = logging.getLogger(__name__)


class SvmConfig(BaseModel):
	model_config = ConfigDict(frozen=True, extra="forbid")

	C: float = Field(default=1.0, gt=0.0)
	max_epochs: int = Field(default=200, gt=0)
	tol: float = Field(default=1e-6, gt=0.0)
	seed: int = 0
	standardize: bool = True


def hinge_objective(coefficients: np.ndarray, features: np.ndarray, targets: np.ndarray, C: float) -> float:
	"""
	Primal objective 0.5 * ||[w; b]||^2 + C * sum(max(0, 1 - y * margin)),
	where the intercept is regularized like any other coefficient.
	"""
	coefficients = np.asarray(coefficients, dtype=np.float64)
	margins = features @ coefficients[:-1] + coefficients[-1]
	hinge = np.maximum(0.0, 1.0 - targets * margins)
	return float(0.5 * coefficients @ coefficients + C * hinge.sum())


def _dual_coordinate_descent(
		design: np.ndarray,
		targets: np.ndarray,
		config: SvmConfig
) -> np.ndarray:
	rng = np.random.default_rng(config.seed)
	n = design.shape[0]
	diag = np.einsum("ij,ij->i", design, design)
	alpha = np.zeros(n)
	w = np.zeros(design.shape[1])
	upper = config.C

	for epoch in range(config.max_epochs):
		pg_max, pg_min = -np.inf, np.inf
		for i in rng.permutation(n):
			row = design[i]
			gradient = targets[i] * (row @ w) - 1.0
			a = alpha[i]
			if a == 0.0:
				projected = min(gradient, 0.0)
			elif a == upper:
				projected = max(gradient, 0.0)
			else:
				projected = gradient
			pg_max = max(pg_max, projected)
			pg_min = min(pg_min, projected)
			if projected != 0.0 and diag[i] > 0.0:
				alpha[i] = min(max(a - gradient / diag[i], 0.0), upper)
				w += (alpha[i] - a) * targets[i] * row
		if pg_max - pg_min <= config.tol:
			logger.debug("Dual coordinate descent converged after %d epochs", epoch + 1)
			break
	else:
		logger.debug("Dual coordinate descent stopped at the %d epoch cap", config.max_epochs)
	return w


def train_svm(features: np.ndarray, targets: np.ndarray, config: SvmConfig = None) -> LinearModel:
	"""
	Trains a linear SVM by dual coordinate descent on the L2-regularized
	hinge loss. The intercept rides along as a constant feature, so it
	is regularized too. When standardization is enabled the solver works
	on locally z-scored features and the result is folded back, so the
	returned model always acts on raw features.

	:param features: Matrix of shape (n, d).
	:param targets: Binary labels encoded as +1 / -1.
	:param config: Solver settings, optional.
	:return: A model of kind `base`. Single-class data yields the constant
		classifier of that class, flagged as degenerate.
	:raises - errors.NumericError: On non-finite input.
	"""
	config = config or SvmConfig()
	features = np.asarray(features, dtype=np.float64)
	targets = np.asarray(targets, dtype=np.float64)
	if features.ndim != 2 or targets.shape != (features.shape[0],):
		raise errors.FeatureSpaceError("(n, d) features with n targets", (features.shape, targets.shape))
	if not (np.isfinite(features).all() and np.isfinite(targets).all()):
		raise errors.NumericError("SVM training data")

	dim = features.shape[1]
	signs = np.unique(np.sign(targets))
	if signs.size < 2:
		label = float(signs[0]) if signs.size else -1.0
		return LinearModel.from_parts(np.zeros(dim), label, degenerate=True)

	scaler = Standardizer.fit(features) if config.standardize else Standardizer.identity(dim)
	design = np.hstack([scaler.transform(features), np.ones((features.shape[0], 1))])
	w = _dual_coordinate_descent(design, targets, config)
	weights, intercept = scaler.fold(w[:-1], w[-1])
	return LinearModel.from_parts(weights, intercept, kind=ModelKind.BASE)
