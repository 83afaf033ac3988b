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
from dataclasses import dataclass
from typing import Optional, Sequence
from ..learn.common import LinearModel, ModelKind, SourceSet
from ..errors import InvalidArgsError
from .ova import OvaClassifier, Predictor
from . import errors


__all__ = [
	"consensus_mean",
	"consensus_ova",
	"majority_vote",
	"majority_vote_batch",
	"MajorityEnsemble"
]


def consensus_mean(models: Sequence[LinearModel]) -> LinearModel:
	"""
	Coefficient-wise arithmetic mean of models living in one feature space.

	:param models: At least one model.
	:return: The mean model, of kind `aggregate`.
	:raises - errors.MixedFeatureSpaceError: If the models differ in
		feature space, layout or source clipping.
	"""
	if not models:
		raise InvalidArgsError("Cannot average an empty list of models.")
	layouts = {(m.feature_space_id, m.dim, m.num_sources, m.source_clip) for m in models}
	if len(layouts) > 1:
		raise errors.MixedFeatureSpaceError(sorted(str(layout) for layout in layouts))
	first = models[0]
	return LinearModel(
		coefficients=np.mean(np.vstack([m.coefficients for m in models]), axis=0),
		kind=ModelKind.AGGREGATE,
		feature_space_id=first.feature_space_id,
		degenerate=all(m.degenerate for m in models),
		num_sources=first.num_sources,
		source_clip=first.source_clip
	)


def consensus_ova(
		classifiers: Sequence[OvaClassifier],
		sources: Optional[Sequence[SourceSet]] = None
) -> OvaClassifier:
	"""
	Averages OvA classifiers class by class. The result is evaluated
	with `sources`, the per-class source sets of the location using it.
	"""
	if not classifiers:
		raise InvalidArgsError("Cannot average an empty list of classifiers.")
	labels = classifiers[0].labels
	if any(clf.labels != labels for clf in classifiers):
		raise errors.MixedFeatureSpaceError("classifiers over different label sets")
	models = tuple(
		consensus_mean([clf.models[i] for clf in classifiers])
		for i in range(len(labels))
	)
	return OvaClassifier(models=models, labels=labels, sources=sources)


def majority_vote(predictions: Sequence[int]) -> int:
	"""
	:param predictions: Non-empty list of 1-based class labels.
	:return: The most frequent label, ties resolve to the lowest label.
	"""
	if len(predictions) == 0:
		raise InvalidArgsError("Cannot vote over an empty list of predictions.")
	return int(np.argmax(np.bincount(np.asarray(predictions, dtype=np.int64))))


def majority_vote_batch(predictions: np.ndarray) -> np.ndarray:
	"""
	:param predictions: Matrix of shape (voters, n) holding 1-based labels.
	:return: The per-column majority label.
	"""
	predictions = np.atleast_2d(np.asarray(predictions, dtype=np.int64))
	voters, n = predictions.shape
	if n == 0:
		return np.zeros(0, dtype=np.int64)
	counts = np.zeros((n, int(predictions.max()) + 1), dtype=np.int64)
	np.add.at(counts, (np.tile(np.arange(n), voters), predictions.ravel()), 1)
	return np.argmax(counts, axis=1)


@dataclass(frozen=True, eq=False)
class MajorityEnsemble:
	members: tuple[Predictor, ...]

	def __post_init__(self) -> None:
		object.__setattr__(self, 'members', tuple(self.members))
		if not self.members:
			raise InvalidArgsError("A majority ensemble needs at least one member.")

	def predict(self, features: np.ndarray) -> np.ndarray:
		features = np.atleast_2d(np.asarray(features, dtype=np.float64))
		votes = np.vstack([member.predict(features) for member in self.members])
		return majority_vote_batch(votes)
