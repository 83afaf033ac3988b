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
from typing import Literal, Optional
from pydantic import BaseModel, ConfigDict, Field
from ..errors import ConfigurationError
from .. import utils
from .common import SamplePool, LocalDataset
from . import errors


__all__ = [
	"PartitionSpec",
	"partition",
	"partition_indices",
	"partition_by_group"
]


logger = logging.getLogger(__name__)

_PARTITION_STAGE = 13


class PartitionSpec(BaseModel):
	"""
	Describes how a training pool is spread over locations.
	Class labels are 1-based; the default depleted classes
	are the digits 2, 5, 6, 7 and 8 of MNIST.
	"""
	model_config = ConfigDict(frozen=True, extra="forbid")

	regime: Literal["balanced", "class_unbalance", "node_unbalance"] = "balanced"
	num_locations: int = Field(default=10, ge=1)
	dominant_fraction: float = Field(default=0.7, gt=0.0, le=1.0)
	depleted_classes: tuple[int, ...] = (3, 6, 7, 8, 9)
	keep_fraction: float = Field(default=0.1, gt=0.0, le=1.0)
	samples_per_location: Optional[int] = Field(default=None, ge=1)
	seed: int = 0


def _shuffled_by_class(pool: SamplePool, rng: np.random.Generator) -> list[np.ndarray]:
	return [
		rng.permutation(np.flatnonzero(pool.y == label))
		for label in range(1, pool.num_classes + 1)
	]


def _round_robin(per_class: list[np.ndarray], num_locations: int) -> list[np.ndarray]:
	buckets: list[list[np.ndarray]] = [[] for _ in range(num_locations)]
	start = 0
	for indices in per_class:
		targets = (start + np.arange(indices.size)) % num_locations
		for location in range(num_locations):
			buckets[location].append(indices[targets == location])
		start = (start + indices.size) % num_locations
	return [np.sort(np.concatenate(b)) if b else np.empty(0, np.int64) for b in buckets]


def _node_unbalance_demand(size: int, spec: PartitionSpec, k: int) -> np.ndarray:
	demand = np.zeros(k, dtype=np.int64)
	for location in range(spec.num_locations):
		for label, count in _node_unbalance_quota(location, size, spec, k).items():
			demand[label - 1] += count
	return demand


def _node_unbalance_quota(location: int, size: int, spec: PartitionSpec, k: int) -> dict[int, int]:
	dominant = location % k + 1
	dominant_count = int(round(spec.dominant_fraction * size))
	rest = size - dominant_count
	quota = {dominant: dominant_count}
	if k == 1:
		quota[dominant] = size
		return quota
	others = [(dominant - 1 + offset) % k + 1 for offset in range(1, k)]
	base, extra = divmod(rest, k - 1)
	for rank, label in enumerate(others):
		quota[label] = base + (1 if rank < extra else 0)
	return quota


def _node_unbalance_size(pool: SamplePool, spec: PartitionSpec) -> int:
	k = pool.num_classes
	supply = pool.class_counts()
	if spec.samples_per_location is not None:
		size = spec.samples_per_location
		shortfall = supply - _node_unbalance_demand(size, spec, k)
		if (shortfall < 0).any():
			label = int(np.argmin(shortfall)) + 1
			needed = int(_node_unbalance_demand(size, spec, k)[label - 1])
			raise errors.PartitionError(label, needed, int(supply[label - 1]))
		return size

	for size in range(len(pool) // spec.num_locations, 0, -1):
		if (_node_unbalance_demand(size, spec, k) <= supply).all():
			return size
	label = int(np.argmin(supply)) + 1
	raise errors.PartitionError(label, spec.num_locations, int(supply[label - 1]))


def partition_indices(pool: SamplePool, spec: PartitionSpec) -> tuple[list[np.ndarray], np.ndarray]:
	"""
	Computes which pool rows go to which location.

	:param pool: The training pool to distribute.
	:param spec: The partitioning regime and its parameters.
	:return: A tuple of per-location row indices and the rows left
		unassigned. Rows are only left out by the depletion of the
		class_unbalance regime and by the supply-limited quotas of
		the node_unbalance regime.
	:raises - errors.PartitionError: If some class cannot supply
		the samples the regime asks for.
	"""
	if len(pool) == 0:
		raise ConfigurationError("Cannot partition an empty pool.")

	everything = np.arange(len(pool))
	if spec.num_locations == 1:
		return [everything], np.empty(0, np.int64)

	rng = utils.derive_rng(spec.seed, _PARTITION_STAGE)
	per_class = _shuffled_by_class(pool, rng)
	k = pool.num_classes

	match spec.regime:
		case "balanced":
			assigned = _round_robin(per_class, spec.num_locations)

		case "class_unbalance":
			for label in spec.depleted_classes:
				if not 1 <= label <= k:
					raise ConfigurationError(f"Depleted class {label} is outside of 1..{k}.")
				indices = per_class[label - 1]
				keep = int(round(spec.keep_fraction * indices.size))
				if indices.size and keep < spec.num_locations:
					raise errors.PartitionError(label, spec.num_locations, keep)
				per_class[label - 1] = indices[:keep]
			assigned = _round_robin(per_class, spec.num_locations)

		case "node_unbalance":
			if spec.num_locations % k:
				logger.warning(
					"%d locations are not a multiple of %d classes, "
					"dominant classes will not rotate evenly",
					spec.num_locations, k
				)
			size = _node_unbalance_size(pool, spec)
			cursors = np.zeros(k, dtype=np.int64)
			assigned = []
			for location in range(spec.num_locations):
				chunks = []
				for label, count in sorted(_node_unbalance_quota(location, size, spec, k).items()):
					start = cursors[label - 1]
					chunks.append(per_class[label - 1][start:start + count])
					cursors[label - 1] += count
				assigned.append(np.sort(np.concatenate(chunks)))

		case _:  # pragma: no cover
			raise ConfigurationError(f"Unknown partition regime: {spec.regime}")

	used = np.concatenate(assigned) if assigned else np.empty(0, np.int64)
	leftover = np.setdiff1d(everything, used)
	if leftover.size:
		logger.info(
			"Partition regime %s left %d of %d samples unassigned",
			spec.regime, leftover.size, len(pool)
		)
	return assigned, leftover


def partition(pool: SamplePool, spec: PartitionSpec) -> list[LocalDataset]:
	"""
	Distributes a training pool over `spec.num_locations` locations.

	:param pool: The training pool to distribute.
	:param spec: The partitioning regime and its parameters.
	:return: One local dataset per location, with location ids 0..s-1.
	:raises - errors.PartitionError: If some class cannot supply
		the samples the regime asks for.
	"""
	assigned, _ = partition_indices(pool, spec)
	return [
		LocalDataset(
			location_id=location_id,
			X=pool.X[indices],
			y=pool.y[indices],
			num_classes=pool.num_classes
		)
		for location_id, indices in enumerate(assigned)
	]


def partition_by_group(pool: SamplePool) -> list[LocalDataset]:
	"""
	Turns every group of the pool into one location, keeping the
	group value as the location id. Used for datasets whose locations
	are fixed by the data, like the redistributed HAPT users.
	"""
	if pool.groups is None:
		raise ConfigurationError("Pool has no groups to partition by.")
	return [
		LocalDataset(
			location_id=int(group),
			X=pool.X[pool.groups == group],
			y=pool.y[pool.groups == group],
			num_classes=pool.num_classes
		)
		for group in np.unique(pool.groups)
	]
