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
import orjson
import numpy as np
from dataclasses import dataclass
from typing import Callable, Optional, Protocol, Sequence
from ..data.common import LocalDataset
from ..learn.common import LinearModel, SourceSet
from ..errors import InvalidArgsError
from . import errors


__all__ = [
	"Predictor",
	"BinaryTrainer",
	"CodeBook",
	"OvaClassifier",
	"decode",
	"decode_batch",
	"predict",
	"train_ova"
]


BinaryTrainer = Callable[[np.ndarray, np.ndarray, int], LinearModel]


class Predictor(Protocol):
	def predict(self, features: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True, eq=False)
class CodeBook:
	rows: np.ndarray

	def __post_init__(self) -> None:
		rows = np.asarray(self.rows, dtype=np.float64)
		if rows.ndim != 2 or rows.shape[0] != rows.shape[1]:
			raise InvalidArgsError("A codebook must be a square matrix.")
		if not np.isin(rows, (-1.0, 1.0)).all() or not (np.sum(rows > 0, axis=1) == 1).all():
			raise InvalidArgsError("Every codebook row must hold exactly one +1 and -1 elsewhere.")
		if np.unique(rows, axis=0).shape[0] != rows.shape[0]:
			raise InvalidArgsError("Codebook rows must be pairwise distinct.")
		object.__setattr__(self, 'rows', rows)

	@classmethod
	def one_hot(cls, k: int) -> CodeBook:
		return cls(rows=2.0 * np.eye(k) - 1.0)

	@property
	def size(self) -> int:
		return self.rows.shape[0]


def decode_batch(responses: np.ndarray, book: CodeBook) -> np.ndarray:
	"""
	Decodes rows of binary responses into 1-based class labels by the
	smallest summed hinge loss against the codebook rows. Exactly equal
	losses resolve to the lowest class.
	"""
	responses = np.atleast_2d(np.asarray(responses, dtype=np.float64))
	if responses.shape[1] != book.size:
		raise InvalidArgsError(f"Expected {book.size} responses per row, got {responses.shape[1]}.")
	losses = np.maximum(0.0, 1.0 - responses[:, None, :] * book.rows[None, :, :]).sum(axis=2)
	return np.argmin(losses, axis=1) + 1


def decode(responses: Sequence[float] | np.ndarray, book: CodeBook) -> int:
	return int(decode_batch(np.asarray(responses, dtype=np.float64)[None, :], book)[0])


@dataclass(frozen=True, eq=False)
class OvaClassifier:
	"""
	One binary model per class, evaluated against the one-hot codebook.
	Models with sources need the per-class source set they were
	trained or averaged with.
	"""
	models: tuple[LinearModel, ...]
	labels: tuple[int, ...]
	sources: Optional[tuple[SourceSet, ...]] = None

	def __post_init__(self) -> None:
		object.__setattr__(self, 'models', tuple(self.models))
		object.__setattr__(self, 'labels', tuple(int(c) for c in self.labels))
		if len(self.models) != len(self.labels) or not self.models:
			raise InvalidArgsError("An OvA classifier needs exactly one model per class label.")
		spaces = {m.feature_space_id for m in self.models}
		if len(spaces) > 1:
			raise errors.MixedFeatureSpaceError(sorted(spaces))
		if self.sources is not None:
			object.__setattr__(self, 'sources', tuple(self.sources))
			if len(self.sources) != len(self.models):
				raise InvalidArgsError("Expected one source set per class.")

	@property
	def num_classes(self) -> int:
		return len(self.models)

	@property
	def codebook(self) -> CodeBook:
		return CodeBook.one_hot(self.num_classes)

	def margins(self, features: np.ndarray) -> np.ndarray:
		features = np.atleast_2d(np.asarray(features, dtype=np.float64))
		columns = [
			model.decision_function(features, self.sources[i] if self.sources else None)
			for i, model in enumerate(self.models)
		]
		return np.column_stack(columns)

	def predict(self, features: np.ndarray) -> np.ndarray:
		responses = np.where(self.margins(features) >= 0.0, 1.0, -1.0)
		indices = decode_batch(responses, self.codebook) - 1
		return np.asarray(self.labels)[indices]

	def to_record(self) -> bytes:
		return orjson.dumps({
			"type": "ova",
			"labels": list(self.labels),
			"models": [orjson.loads(m.to_record()) for m in self.models]
		})

	@classmethod
	def from_record(cls, record: bytes, sources: Optional[Sequence[SourceSet]] = None) -> OvaClassifier:
		doc = orjson.loads(record)
		models = tuple(LinearModel.from_record(orjson.dumps(m)) for m in doc["models"])
		return cls(models=models, labels=tuple(doc["labels"]), sources=sources)


def predict(clf: OvaClassifier, features: np.ndarray) -> int | np.ndarray:
	"""
	:param clf: The classifier to evaluate.
	:param features: A single raw feature vector or a matrix of them.
	:return: The predicted label, or an array of labels for a matrix.
	"""
	features = np.asarray(features, dtype=np.float64)
	labels = clf.predict(features)
	return int(labels[0]) if features.ndim == 1 else labels


def train_ova(data: LocalDataset, binary_trainer: BinaryTrainer) -> OvaClassifier:
	"""
	Trains one binary model per class c, with +1 for samples of class c
	and -1 for all others.

	:param data: The local dataset, its `num_classes` fixes k.
	:param binary_trainer: Called as trainer(features, targets, class_label).
	:return: The one-vs-all classifier over classes 1..k.
	"""
	labels = tuple(range(1, data.num_classes + 1))
	models = tuple(
		binary_trainer(data.X, data.binary_targets(label), label)
		for label in labels
	)
	return OvaClassifier(models=models, labels=labels)
