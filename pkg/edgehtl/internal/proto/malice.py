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
import threading
import numpy as np
from dataclasses import dataclass
from pydantic import BaseModel, ConfigDict, Field
from typing import Iterable, Literal, Sequence
from ..data.common import LocalDataset, SamplePool
from ..learn.common import LinearModel
from ..netsim.common import EncodingConfig, Phase
from .. import utils
from .common import ProtocolConfig, ProtocolResult
from .runner import run_protocol


__all__ = ["MaliciousConfig", "MaliciousTamper", "MaliceOutcome", "corrupt", "run_with_malice"]


logger = logging.getLogger(__name__)

STAGE_NODES = 7
STAGE_NOISE = 8


class MaliciousConfig(BaseModel):
	"""
	Corruption of exchanged models. `malicious1` picks a fraction
	`node_fraction` of the nodes and replaces all their coefficients,
	`malicious2` lets every node replace each coefficient with
	probability `param_probability`. The noise is standard normal.
	"""
	model_config = ConfigDict(frozen=True, extra="forbid")

	mode: Literal["malicious1", "malicious2"] = "malicious1"
	node_fraction: float = Field(default=0.0, ge=0.0, le=1.0)
	param_probability: float = Field(default=0.0, ge=0.0, le=1.0)
	corrupt_step3: bool = False
	seed: int = 0


def corrupt(model: LinearModel, config: MaliciousConfig, rng: np.random.Generator) -> LinearModel:
	noise = rng.standard_normal(model.coefficients.size)
	if config.mode == "malicious1":
		return model.with_coefficients(noise)
	mask = rng.random(model.coefficients.size) < config.param_probability
	return model.with_coefficients(np.where(mask, noise, model.coefficients))


class MaliciousTamper:
	"""
	Corrupts the outgoing models of the malicious nodes. Each node
	corrupts a model once per phase and class and sends that same copy
	to every receiver. Step 1 and collector uploads are corrupted, the
	transfer models of Step 3 only with `corrupt_step3`.
	"""

	def __init__(self, config: MaliciousConfig, node_ids: Iterable[int]) -> None:
		ids = sorted(int(i) for i in node_ids)
		self.config = config
		if config.mode == "malicious1":
			count = round(config.node_fraction * len(ids))
			rng = utils.derive_rng(config.seed, STAGE_NODES)
			chosen = rng.choice(ids, size=count, replace=False) if count else []
			self.malicious = frozenset(int(i) for i in chosen)
		else:
			self.malicious = frozenset(ids) if config.param_probability > 0 else frozenset()
		self.phases = {Phase.STEP1, Phase.COLLECTOR_UP}
		if config.corrupt_step3:
			self.phases.add(Phase.STEP3)
		self._cache: dict[tuple[int, Phase, int], LinearModel] = {}
		self._lock = threading.Lock()
		logger.info("Malicious nodes: %s", sorted(self.malicious))

	def __call__(self, src: int, phase: Phase, class_label: int, model: LinearModel) -> LinearModel:
		if src not in self.malicious or phase not in self.phases:
			return model
		key = (src, phase, class_label)
		with self._lock:
			if key not in self._cache:
				rng = utils.derive_rng(
					self.config.seed, STAGE_NOISE, src, class_label, list(Phase).index(phase)
				)
				self._cache[key] = corrupt(model, self.config, rng)
			return self._cache[key]


def _mean_by_step(result: ProtocolResult, test: SamplePool, metric: str) -> dict[str, float]:
	frame = result.evaluate(test).to_frame()
	frame = frame[frame["metric"] == metric]
	return frame.groupby("step")["value"].mean().to_dict()


@dataclass(eq=False)
class MaliceOutcome:
	clean: ProtocolResult
	corrupted: ProtocolResult
	malicious: frozenset[int]

	def delta(self, test: SamplePool, metric: str = "f_measure") -> dict[str, float]:
		"""
		:return: Per step, the mean metric of the corrupted run minus
			the mean metric of the clean run.
		"""
		clean = _mean_by_step(self.clean, test, metric)
		corrupted = _mean_by_step(self.corrupted, test, metric)
		return {step: corrupted[step] - clean[step] for step in clean if step in corrupted}


def run_with_malice(
		datasets: Sequence[LocalDataset],
		protocol: ProtocolConfig,
		malicious: MaliciousConfig,
		encoding: EncodingConfig = None
) -> MaliceOutcome:
	"""
	Runs one procedure twice with the same seeds, once clean and once
	with the malicious nodes corrupting their outgoing models.
	"""
	clean = run_protocol(datasets, protocol, encoding)
	tamper = MaliciousTamper(malicious, (ds.location_id for ds in datasets))
	corrupted = run_protocol(datasets, protocol, encoding, tamper)
	return MaliceOutcome(clean=clean, corrupted=corrupted, malicious=tamper.malicious)
