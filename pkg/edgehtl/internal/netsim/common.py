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
from enum import Enum
from typing import Optional
from dataclasses import dataclass
from pydantic import BaseModel, ConfigDict, Field
from ..learn.common import EPS_ZERO, LinearModel, ModelKind


__all__ = ["Phase", "EncodingConfig", "ModelMessage", "Receipt"]


class Phase(str, Enum):
	STEP1 = "step1"
	STEP3 = "step3"
	COLLECTOR_UP = "collector_up"
	COLLECTOR_DOWN = "collector_down"
	DYN_G = "dyn_G"


class EncodingConfig(BaseModel):
	"""
	Byte accounting of model payloads. Sparse payloads are charged per
	value only, unless `indexed` adds `index_bytes` for every index.
	"""
	model_config = ConfigDict(frozen=True, extra="forbid")

	bytes_per_coeff: int = Field(default=8, gt=0)
	indexed: bool = False
	index_bytes: int = Field(default=4, ge=0)
	eps_zero: float = Field(default=EPS_ZERO, ge=0.0)


@dataclass(frozen=True)
class ModelMessage:
	src: int
	dst: int
	phase: Phase
	payload: bytes
	non_null_count: int
	byte_size: int
	class_label: Optional[int] = None
	owner: Optional[int] = None

	@classmethod
	def wrap(
			cls,
			src: int,
			dst: int,
			phase: Phase,
			model: LinearModel,
			encoding: EncodingConfig = None,
			class_label: int = None,
			owner: int = None
	) -> ModelMessage:
		"""
		Serializes a model into a metered message. Models of kind
		`gtl` travel sparse, all others dense.

		:param owner: Location that trained the model, defaults to `src`.
		"""
		encoding = encoding or EncodingConfig()
		sparse = model.kind == ModelKind.GTL
		count = model.non_null_count(encoding.eps_zero)
		size = count * encoding.bytes_per_coeff
		if sparse and encoding.indexed:
			size += count * encoding.index_bytes
		return cls(
			src=src,
			dst=dst,
			phase=Phase(phase),
			payload=model.to_record(sparse=sparse, eps=encoding.eps_zero),
			non_null_count=count,
			byte_size=size,
			class_label=class_label,
			owner=src if owner is None else owner
		)

	def model(self) -> LinearModel:
		return LinearModel.from_record(self.payload)


@dataclass(frozen=True)
class Receipt:
	sequence: int
	src: int
	dst: int
	phase: Phase
