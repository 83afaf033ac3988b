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
from typing import Iterator, Sequence
from dataclasses import dataclass, field
from ..errors import InvalidArgsError
from . import errors


__all__ = [
	"Sample",
	"SamplePool",
	"LocalDataset",
	"HoldoutSplit"
]


def _as_arrays(features: np.ndarray, labels: np.ndarray, num_classes: int) -> tuple[np.ndarray, np.ndarray]:
	features = np.asarray(features, dtype=np.float64)
	labels = np.asarray(labels, dtype=np.int64)
	if features.ndim != 2:
		raise errors.DataDimensionError("(n, d)", features.shape)
	if labels.shape != (features.shape[0],):
		raise errors.DataDimensionError((features.shape[0],), labels.shape)
	if num_classes < 1:
		raise InvalidArgsError("Number of classes must be positive.")
	if labels.size and (labels.min() < 1 or labels.max() > num_classes):
		raise InvalidArgsError(f"Labels must lie within 1..{num_classes}.")
	return features, labels


@dataclass(frozen=True)
class Sample:
	features: np.ndarray
	label: int


@dataclass(frozen=True, eq=False)
class SamplePool:
	"""
	Row-aligned feature matrix and 1-based labels. The optional
	`groups` array tags every row with its origin, for example
	the user id of a HAPT recording or a location id.
	"""
	X: np.ndarray
	y: np.ndarray
	num_classes: int
	groups: np.ndarray | None = field(default=None)

	def __post_init__(self) -> None:
		X, y = _as_arrays(self.X, self.y, self.num_classes)
		object.__setattr__(self, 'X', X)
		object.__setattr__(self, 'y', y)
		if self.groups is not None:
			groups = np.asarray(self.groups, dtype=np.int64)
			if groups.shape != y.shape:
				raise errors.DataDimensionError(y.shape, groups.shape)
			object.__setattr__(self, 'groups', groups)

	def __len__(self) -> int:
		return self.y.shape[0]

	def __iter__(self) -> Iterator[Sample]:
		for x, label in zip(self.X, self.y):
			yield Sample(features=x, label=int(label))

	@property
	def dim(self) -> int:
		return self.X.shape[1]

	def subset(self, indices: Sequence[int] | np.ndarray) -> SamplePool:
		indices = np.asarray(indices, dtype=np.int64)
		groups = None if self.groups is None else self.groups[indices]
		return SamplePool(self.X[indices], self.y[indices], self.num_classes, groups)

	def class_counts(self) -> np.ndarray:
		return np.bincount(self.y, minlength=self.num_classes + 1)[1:]

	@classmethod
	def concat(cls, datasets: Sequence[LocalDataset]) -> SamplePool:
		"""
		Stacks local datasets back into one pool whose
		groups are the location ids of the datasets.
		"""
		if not datasets:
			raise InvalidArgsError("Cannot concatenate an empty list of datasets.")
		return cls(
			X=np.vstack([ds.X for ds in datasets]),
			y=np.concatenate([ds.y for ds in datasets]),
			num_classes=datasets[0].num_classes,
			groups=np.concatenate([np.full(ds.n_l, ds.location_id) for ds in datasets])
		)


@dataclass(frozen=True, eq=False)
class LocalDataset:
	location_id: int
	X: np.ndarray
	y: np.ndarray
	num_classes: int

	def __post_init__(self) -> None:
		X, y = _as_arrays(self.X, self.y, self.num_classes)
		object.__setattr__(self, 'X', X)
		object.__setattr__(self, 'y', y)

	@property
	def n_l(self) -> int:
		return self.y.shape[0]

	@property
	def dim(self) -> int:
		return self.X.shape[1]

	def binary_targets(self, class_label: int) -> np.ndarray:
		"""
		:param class_label: The class treated as positive.
		:return: Labels encoded as +1 for `class_label` and -1 otherwise.
		"""
		return np.where(self.y == class_label, 1.0, -1.0)

	def class_counts(self) -> np.ndarray:
		return np.bincount(self.y, minlength=self.num_classes + 1)[1:]

	def samples(self) -> list[Sample]:
		return [Sample(features=x, label=int(label)) for x, label in zip(self.X, self.y)]


@dataclass(frozen=True, eq=False)
class HoldoutSplit:
	"""
	The test pool is reserved before any partitioning takes place,
	the train pool is what the partitioners distribute to locations.
	"""
	train: SamplePool
	test: SamplePool
	ratio: float
	train_indices: np.ndarray
	test_indices: np.ndarray
