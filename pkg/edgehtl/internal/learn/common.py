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
import logging
import numpy as np
from enum import Enum
from typing import Mapping, Optional
from dataclasses import dataclass, field, replace
from . import errors


__all__ = [
	"EPS_ZERO",
	"RECORD_VERSION",
	"ModelKind",
	"LinearModel",
	"SourceSet",
	"raw_space",
	"gtl_space",
	"source_features",
	"flatten"
]


logger = logging.getLogger(__name__)

EPS_ZERO = 1e-12
RECORD_VERSION = 1


class ModelKind(str, Enum):
	BASE = "base"
	GTL = "gtl"
	AGGREGATE = "aggregate"


def raw_space(dim: int) -> str:
	return f"raw:{dim}"


def gtl_space(dim: int, num_sources: int) -> str:
	return f"gtl:{dim}+{num_sources}"


@dataclass(frozen=True, eq=False)
class LinearModel:
	"""
	Coefficient vector of a binary linear classifier, the unit of all
	network exchange. Models without sources are laid out as [w; b],
	models with L sources as [beta (L); omega (d); b].
	"""
	coefficients: np.ndarray
	kind: ModelKind
	feature_space_id: str
	degenerate: bool = False
	num_sources: int = 0
	source_clip: Optional[float] = field(default=None)

	def __post_init__(self) -> None:
		coefficients = np.array(self.coefficients, dtype=np.float64).ravel()
		if not np.isfinite(coefficients).all():
			raise errors.NumericError("model coefficients")
		if coefficients.size < self.num_sources + 1:
			raise errors.FeatureSpaceError(f">= {self.num_sources + 1} coefficients", coefficients.size)
		coefficients.setflags(write=False)
		object.__setattr__(self, 'coefficients', coefficients)
		object.__setattr__(self, 'kind', ModelKind(self.kind))

	@classmethod
	def from_parts(
			cls,
			weights: np.ndarray,
			intercept: float,
			kind: ModelKind = ModelKind.BASE,
			degenerate: bool = False
	) -> LinearModel:
		weights = np.asarray(weights, dtype=np.float64)
		return cls(
			coefficients=np.append(weights, intercept),
			kind=kind,
			feature_space_id=raw_space(weights.size),
			degenerate=degenerate
		)

	@property
	def dim(self) -> int:
		return self.coefficients.size

	@property
	def raw_dim(self) -> int:
		return self.coefficients.size - self.num_sources - 1

	@property
	def betas(self) -> np.ndarray:
		return self.coefficients[:self.num_sources]

	@property
	def weights(self) -> np.ndarray:
		return self.coefficients[self.num_sources:-1]

	@property
	def intercept(self) -> float:
		return float(self.coefficients[-1])

	def non_null_count(self, eps: float = EPS_ZERO) -> int:
		return int(np.count_nonzero(np.abs(self.coefficients) > eps))

	def with_coefficients(self, coefficients: np.ndarray, **changes) -> LinearModel:
		return replace(self, coefficients=coefficients, **changes)

	def decision_function(self, features: np.ndarray, sources: SourceSet | None = None) -> np.ndarray:
		"""
		Evaluates raw margins. Models with sources evaluate
		omega^T x + sum(beta_i * h_i(x)) + b, where the source margins
		are clipped the same way as during training.

		:param features: A single vector or a matrix of raw features.
		:param sources: The ordered source models, when `num_sources` > 0.
		:return: Margin per row, or a scalar margin for a single vector.
		:raises - errors.FeatureSpaceError: On mismatching dimensions
			or a missing or wrongly sized source set.
		"""
		features = np.asarray(features, dtype=np.float64)
		single = features.ndim == 1
		matrix = np.atleast_2d(features)
		if matrix.shape[1] != self.raw_dim:
			raise errors.FeatureSpaceError(self.raw_dim, matrix.shape[1])

		margins = matrix @ self.weights + self.intercept
		if self.num_sources:
			if sources is None or len(sources) != self.num_sources:
				actual = None if sources is None else len(sources)
				raise errors.FeatureSpaceError(f"{self.num_sources} sources", actual)
			margins = margins + sources.features(matrix, self.source_clip) @ self.betas
		return margins[0] if single else margins

	def to_record(self, sparse: bool | None = None, eps: float = EPS_ZERO) -> bytes:
		"""
		Serializes the model into a versioned JSON record. Sparse records
		carry (index, value) pairs of the non-null coefficients only.

		:param sparse: Forces the payload encoding, by default models
			of kind `gtl` are sparse and all others dense.
		:param eps: Magnitude at or below which a coefficient is null.
		:return: The encoded record.
		"""
		if sparse is None:
			sparse = self.kind == ModelKind.GTL
		if sparse:
			indices = np.flatnonzero(np.abs(self.coefficients) > eps)
			payload = [[int(i), float(self.coefficients[i])] for i in indices]
		else:
			payload = self.coefficients.tolist()
		return orjson.dumps({
			"v": RECORD_VERSION,
			"type": "model",
			"feature_space_id": self.feature_space_id,
			"kind": self.kind.value,
			"degenerate": self.degenerate,
			"num_sources": self.num_sources,
			"source_clip": self.source_clip,
			"dim": self.dim,
			"encoding": "sparse" if sparse else "dense",
			"payload": payload
		})

	@classmethod
	def from_record(cls, record: bytes | str) -> LinearModel:
		"""
		:param record: Bytes produced by `to_record`.
		:return: The decoded model.
		:raises - errors.ModelRecordError: On any malformed record.
		"""
		try:
			doc = orjson.loads(record)
		except orjson.JSONDecodeError as ex:
			raise errors.ModelRecordError(str(ex))
		if not isinstance(doc, dict) or doc.get("type") != "model":
			raise errors.ModelRecordError("not a model record")
		if doc.get("v") != RECORD_VERSION:
			raise errors.ModelRecordError(f"unsupported version {doc.get('v')}")
		try:
			dim = int(doc["dim"])
			if doc["encoding"] == "sparse":
				coefficients = np.zeros(dim)
				for index, value in doc["payload"]:
					coefficients[int(index)] = float(value)
			elif doc["encoding"] == "dense":
				coefficients = np.asarray(doc["payload"], dtype=np.float64)
				if coefficients.shape != (dim,):
					raise ValueError(f"dense payload has {coefficients.size} of {dim} values")
			else:
				raise ValueError(f"unknown encoding {doc['encoding']}")
			return cls(
				coefficients=coefficients,
				kind=ModelKind(doc["kind"]),
				feature_space_id=str(doc["feature_space_id"]),
				degenerate=bool(doc["degenerate"]),
				num_sources=int(doc["num_sources"]),
				source_clip=doc.get("source_clip")
			)
		except (KeyError, TypeError, ValueError, IndexError) as ex:
			raise errors.ModelRecordError(str(ex))


@dataclass(frozen=True, eq=False)
class SourceSet:
	"""
	Source models ordered by the location id of their owners.
	Every location builds its set in the same order.
	"""
	models: tuple[LinearModel, ...] = ()
	owners: tuple[int, ...] = ()

	def __post_init__(self) -> None:
		object.__setattr__(self, 'models', tuple(self.models))
		object.__setattr__(self, 'owners', tuple(int(o) for o in self.owners))
		if len(self.models) != len(self.owners):
			raise errors.FeatureSpaceError(f"{len(self.models)} owners", len(self.owners))
		dims = {m.raw_dim for m in self.models}
		if len(dims) > 1:
			raise errors.FeatureSpaceError("one raw feature space", sorted(dims))
		if any(m.num_sources for m in self.models):
			raise errors.FeatureSpaceError("raw-space source models", "models with sources")

	@classmethod
	def from_mapping(cls, mapping: Mapping[int, LinearModel]) -> SourceSet:
		owners = sorted(mapping)
		return cls(models=tuple(mapping[o] for o in owners), owners=tuple(owners))

	def __len__(self) -> int:
		return len(self.models)

	@property
	def raw_dim(self) -> int | None:
		return self.models[0].raw_dim if self.models else None

	def with_extra(self, model: LinearModel, owner: int) -> SourceSet:
		return SourceSet(models=self.models + (model,), owners=self.owners + (owner,))

	def weight_matrix(self) -> np.ndarray:
		return np.vstack([m.weights for m in self.models])

	def intercepts(self) -> np.ndarray:
		return np.array([m.intercept for m in self.models])

	def features(self, features: np.ndarray, clip: float | None = None) -> np.ndarray:
		matrix = np.atleast_2d(np.asarray(features, dtype=np.float64))
		if not self.models:
			return np.zeros((matrix.shape[0], 0))
		if matrix.shape[1] != self.raw_dim:
			raise errors.FeatureSpaceError(self.raw_dim, matrix.shape[1])
		margins = matrix @ self.weight_matrix().T + self.intercepts()
		if clip is not None:
			margins = np.clip(margins, -clip, clip)
		return margins


def source_features(features: np.ndarray, sources: SourceSet, clip: float | None = 1.0) -> np.ndarray:
	"""
	:param features: A raw feature vector, or a matrix of them.
	:param sources: The ordered source models.
	:param clip: Symmetric bound on the source margins, optional.
	:return: The source margins, a vector of length L for a single
		feature vector, otherwise a matrix of shape (n, L).
	:raises - errors.FeatureSpaceError: On mismatching dimensions.
	"""
	features = np.asarray(features, dtype=np.float64)
	out = sources.features(features, clip)
	return out[0] if features.ndim == 1 else out


def flatten(model: LinearModel, sources: SourceSet) -> LinearModel:
	"""
	Composes a model with its linear sources into one raw-space model.
	The result is exact only for models trained without source clipping.
	"""
	if not model.num_sources:
		return model
	if len(sources) != model.num_sources:
		raise errors.FeatureSpaceError(f"{model.num_sources} sources", len(sources))
	if model.source_clip is not None:
		logger.warning("Flattening a model with clipped sources approximates its margins")
	weights = model.weights + model.betas @ sources.weight_matrix()
	intercept = model.intercept + float(model.betas @ sources.intercepts())
	return LinearModel(
		coefficients=np.append(weights, intercept),
		kind=ModelKind.AGGREGATE,
		feature_space_id=raw_space(weights.size),
		degenerate=model.degenerate
	)
