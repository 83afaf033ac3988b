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
from dataclasses import dataclass, field
from pydantic import BaseModel, ConfigDict, Field
from typing import Callable, Literal, Optional, Sequence
from ..data.common import LocalDataset, SamplePool
from ..learn.common import LinearModel, SourceSet
from ..learn.svm import SvmConfig, train_svm
from ..learn.greedytl import GreedyTLConfig
from ..multiclass.ova import BinaryTrainer, OvaClassifier, Predictor, train_ova
from ..metrics.scores import evaluate, ppg
from ..metrics.report import MetricsReport
from ..netsim.bus import Bus
from ..netsim.common import ModelMessage, Phase
from ..netsim.errors import NetsimError
from ..netsim.ledger import OverheadLedger
from ..errors import ConfigurationError
from .. import utils
from . import errors


__all__ = [
	"Procedure",
	"Tamper",
	"STAGE_SVM",
	"STAGE_GTL",
	"STAGE_SELECT",
	"STAGE_CLOUD",
	"ProtocolConfig",
	"Node",
	"ProtocolResult",
	"make_nodes",
	"svm_trainer",
	"train_local",
	"transmit",
	"collect",
	"group_by_class",
	"apply_tamper"
]


logger = logging.getLogger(__name__)

Procedure = Literal["gtl", "nohtl_mu", "nohtl_mv", "gtl_limited", "dyn_gtl", "dyn_nohtl"]
Tamper = Callable[[int, Phase, int, LinearModel], LinearModel]

STAGE_SVM = 0
STAGE_GTL = 2
STAGE_SELECT = 5
STAGE_CLOUD = 9

SLOT_ORDER = ("h0", "h2", "h4")


class ProtocolConfig(BaseModel):
	"""
	Settings of one distributed learning procedure. `num_aggregators`
	applies to `gtl_limited`, `collector_id` to `nohtl_mu`, where the
	lowest location id collects when it is left unset.
	"""
	model_config = ConfigDict(frozen=True, extra="forbid")

	procedure: Procedure = "gtl"
	aggregation: tuple[Literal["mean", "majority"], ...] = ("mean", "majority")
	num_aggregators: Optional[int] = Field(default=None, ge=0)
	aggregator_selection: Literal["first", "random"] = "first"
	collector_id: Optional[int] = None
	svm: SvmConfig = Field(default_factory=SvmConfig)
	greedy: GreedyTLConfig = Field(default_factory=GreedyTLConfig)
	seed: int = 0
	workers: int = Field(default=1, ge=1)


@dataclass(eq=False)
class Node:
	"""
	A simulated location. It owns its local data and the classifiers of
	every step, which are only ever filled in step order. Nothing but
	model records leaves a node.
	"""
	location_id: int
	data: LocalDataset
	h0: Optional[OvaClassifier] = None
	h2: Optional[OvaClassifier] = None
	h4: Optional[Predictor] = None
	sources: dict[int, SourceSet] = field(default_factory=dict)

	def fill(self, slot: str, value: Predictor) -> None:
		"""
		:raises - errors.ProtocolError: If the slot is taken or an
			earlier step has not produced its classifier yet.
		"""
		if slot not in SLOT_ORDER:
			raise errors.ProtocolError(slot, "unknown model slot")
		if getattr(self, slot) is not None:
			raise errors.ProtocolError(slot, f"node {self.location_id} already holds this model")
		if slot != "h0" and self.h0 is None:
			raise errors.ProtocolError(slot, f"node {self.location_id} has no local model yet")
		setattr(self, slot, value)


@dataclass(eq=False)
class ProtocolResult:
	"""
	Outcome of one protocol run. `predictors` maps a step name to the
	classifier every location ends up with at that step.
	"""
	procedure: str
	predictors: dict[str, dict[int, Predictor]]
	ledger: OverheadLedger
	nodes: list[Node]
	aggregators: tuple[int, ...] = ()

	@property
	def num_locations(self) -> int:
		return len(self.nodes)

	@property
	def num_classes(self) -> int:
		return self.nodes[0].data.num_classes

	def evaluate(
			self,
			test: SamplePool,
			run: int = 0,
			report: MetricsReport = None,
			base_step: str = "h0",
			**keys
	) -> MetricsReport:
		"""
		Scores every predictor on the test set and adds the performance
		gain of each step over the local model of the same location.
		"""
		report = report if report is not None else MetricsReport()
		cache: dict[int, object] = {}
		base_f: dict[int, float] = {}
		k = test.num_classes
		steps = sorted(self.predictors, key=lambda s: (s != base_step, s))
		for step in steps:
			for location, predictor in sorted(self.predictors[step].items()):
				scores = cache.get(id(predictor))
				if scores is None:
					scores = evaluate(predictor.predict(test.X), test.y, k)
					cache[id(predictor)] = scores
				report.add_scores(run, self.procedure, location, step, scores, **keys)
				if step == base_step:
					base_f[location] = scores.f_measure
				elif location in base_f:
					gain = ppg(scores.f_measure, base_f[location])
					report.add(run, self.procedure, location, step, "ppg", gain, **keys)
		return report


def make_nodes(datasets: Sequence[LocalDataset]) -> list[Node]:
	"""
	:raises - ConfigurationError: On duplicate location ids or
		datasets over different feature spaces or class counts.
	"""
	ids = [ds.location_id for ds in datasets]
	if len(set(ids)) != len(ids):
		raise ConfigurationError("Location ids must be unique.")
	if len({(ds.dim, ds.num_classes) for ds in datasets}) > 1:
		raise ConfigurationError("All locations must share one feature space and class count.")
	return [Node(location_id=ds.location_id, data=ds) for ds in sorted(datasets, key=lambda d: d.location_id)]


def svm_trainer(config: ProtocolConfig, location_id: int) -> BinaryTrainer:
	def trainer(features: np.ndarray, targets: np.ndarray, class_label: int) -> LinearModel:
		seed = utils.derive_seed(config.seed, STAGE_SVM, location_id, class_label)
		return train_svm(features, targets, config.svm.model_copy(update={"seed": seed}))
	return trainer


def train_local(nodes: Sequence[Node], config: ProtocolConfig) -> None:
	"""Step 0: every node trains its one-vs-all SVM classifier."""
	def train(node: Node) -> OvaClassifier:
		return train_ova(node.data, svm_trainer(config, node.location_id))

	classifiers = utils.run_parallel(train, nodes, config.workers)
	for node, clf in zip(nodes, classifiers):
		node.fill("h0", clf)
	logger.info("Trained local classifiers on %d nodes", len(nodes))


def transmit(bus: Bus, phase: Phase, src: int, dst: int, model: LinearModel, **meta) -> None:
	"""Sends one model, reporting bus failures with the phase tag."""
	try:
		bus.send_model(src, dst, phase, model, **meta)
	except NetsimError as ex:
		raise errors.ProtocolError(phase.value, str(ex)) from ex


def collect(bus: Bus, node_id: int, phase: Phase, expected: int) -> list[ModelMessage]:
	"""
	Barrier of a phase: drains the models a node received in it.

	:raises - errors.ProtocolError: Unless exactly `expected` arrived.
	"""
	received = bus.receive(node_id, phase)
	if len(received) != expected:
		raise errors.ProtocolError(
			phase.value, f"node {node_id} received {len(received)} of {expected} models"
		)
	return received


def group_by_class(received: Sequence[ModelMessage]) -> dict[int, dict[int, LinearModel]]:
	out: dict[int, dict[int, LinearModel]] = {}
	for message in received:
		out.setdefault(message.class_label, {})[message.owner] = message.model()
	return out


def apply_tamper(tamper: Tamper | None, src: int, phase: Phase, label: int, model: LinearModel) -> LinearModel:
	return model if tamper is None else tamper(src, phase, label, model)
