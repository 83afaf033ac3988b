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
import logging
import numpy as np
from dataclasses import dataclass
from typing import Optional, Sequence
from ..data.common import LocalDataset, SamplePool
from ..learn.common import LinearModel
from ..learn.svm import SvmConfig, train_svm
from ..multiclass.ova import OvaClassifier, train_ova
from ..netsim.formulas import cloud_overhead, gain
from ..errors import ConfigurationError
from .. import utils
from .common import STAGE_CLOUD


__all__ = ["CloudBaseline", "train_cloud"]


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CloudBaseline:
	"""
	Centralized OvA SVM over the union of all local training sets.
	`overhead` charges the upload of every sample in the feature space
	the learners use, `raw_overhead` in the declared raw sensor space.
	"""
	classifier: OvaClassifier
	num_samples: int
	dim: int
	raw_dim: Optional[int] = None

	@property
	def overhead(self) -> float:
		return cloud_overhead(self.num_samples, self.dim)

	@property
	def raw_overhead(self) -> Optional[float]:
		if self.raw_dim is None:
			return None
		return cloud_overhead(self.num_samples, self.raw_dim)

	def gains(self, overhead: float) -> dict[str, Optional[float]]:
		raw = self.raw_overhead
		return {
			"gain": gain(overhead, self.overhead),
			"gain_raw": None if raw is None else gain(overhead, raw)
		}

	def predict(self, features: np.ndarray) -> np.ndarray:
		return self.classifier.predict(features)


def train_cloud(
		datasets: Sequence[LocalDataset],
		svm: SvmConfig = None,
		seed: int = 0,
		raw_dim: int = None
) -> CloudBaseline:
	"""
	:param datasets: The local datasets whose union is uploaded.
	:param svm: Learner settings, seeded per class from `seed`.
	:param raw_dim: Dimensionality of the raw sensor data, optional.
	:raises - ConfigurationError: Without any training sample.
	"""
	svm = svm or SvmConfig()
	pool = SamplePool.concat(datasets)
	if len(pool) == 0:
		raise ConfigurationError("The cloud baseline needs at least one training sample.")
	union = LocalDataset(location_id=-1, X=pool.X, y=pool.y, num_classes=pool.num_classes)

	def trainer(features: np.ndarray, targets: np.ndarray, class_label: int) -> LinearModel:
		config = svm.model_copy(update={"seed": utils.derive_seed(seed, STAGE_CLOUD, class_label)})
		return train_svm(features, targets, config)

	classifier = train_ova(union, trainer)
	logger.info("Trained the cloud baseline on %d samples", len(pool))
	return CloudBaseline(classifier=classifier, num_samples=len(pool), dim=pool.dim, raw_dim=raw_dim)
