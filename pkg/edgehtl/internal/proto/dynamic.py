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
from pydantic import BaseModel, ConfigDict, Field
from typing import Optional, Sequence
from ..data.common import LocalDataset, SamplePool
from ..learn.common import LinearModel, ModelKind, flatten
from ..learn.errors import FeatureSpaceError
from ..multiclass.ova import OvaClassifier
from ..multiclass.aggregate import consensus_mean
from ..metrics.scores import evaluate
from ..metrics.report import MetricsReport
from ..netsim.bus import Bus
from ..netsim.common import EncodingConfig, Phase
from ..netsim.formulas import gain
from ..netsim.ledger import OverheadLedger
from ..errors import ConfigurationError
from .. import utils
from .common import (
	ProtocolConfig, collect, group_by_class,
	make_nodes, train_local, transmit
)
from .gtl import EXTRA_OWNER, gtl_round


__all__ = [
	"G_ID",
	"DynamicConfig",
	"DynamicPhase",
	"DynamicResult",
	"arrival_stream",
	"ema_merge",
	"run_dynamic"
]


logger = logging.getLogger(__name__)

G_ID = EXTRA_OWNER
STAGE_ARRIVAL = 19


class DynamicConfig(BaseModel):
	"""
	Continuous learning with a permanent device G that keeps the
	aggregate m across phases and merges every new aggregate m'
	as m = alpha * m + (1 - alpha) * m'. The transfer learners of
	this scenario run with `source_clip`, unclipped by default, so
	that their models flatten exactly into the raw feature space.
	"""
	model_config = ConfigDict(frozen=True, extra="forbid")

	alpha: float = Field(default=0.5, gt=0.0, le=1.0)
	batch_size: int = Field(default=4, ge=1)
	source_clip: Optional[float] = Field(default=None, gt=0.0)
	seed: int = 0


def arrival_stream(datasets: Sequence[LocalDataset], batch_size: int, seed: int = 0) -> list[list[LocalDataset]]:
	"""Shuffles the locations with the seed and groups them into arrival batches."""
	rng = utils.derive_rng(seed, STAGE_ARRIVAL)
	order = [datasets[i] for i in rng.permutation(len(datasets))]
	return [order[i:i + batch_size] for i in range(0, len(order), batch_size)]


def ema_merge(current: LinearModel, update: LinearModel, alpha: float) -> LinearModel:
	"""
	:raises - FeatureSpaceError: If the two models differ in layout.
	"""
	if current.feature_space_id != update.feature_space_id or current.dim != update.dim:
		raise FeatureSpaceError(current.feature_space_id, update.feature_space_id)
	merged = alpha * current.coefficients + (1.0 - alpha) * update.coefficients
	return current.with_coefficients(merged, kind=ModelKind.AGGREGATE)


@dataclass(eq=False)
class DynamicPhase:
	index: int
	node_ids: tuple[int, ...]
	aggregate: Optional[OvaClassifier]
	ledger: OverheadLedger
	num_samples: int = 0
	dim: int = 0
	skipped: bool = False

	@property
	def overhead(self) -> int:
		return self.ledger.count()

	@property
	def cloud_overhead(self) -> int:
		return self.num_samples * self.dim

	@property
	def gain(self) -> Optional[float]:
		return gain(self.overhead, self.cloud_overhead)


@dataclass(eq=False)
class DynamicResult:
	procedure: str
	phases: list[DynamicPhase]
	ledger: OverheadLedger
	alpha: float = 0.5

	@property
	def models(self) -> list[Optional[OvaClassifier]]:
		"""The aggregate stored at G after every phase."""
		return [phase.aggregate for phase in self.phases]

	def mean_phase_overhead(self) -> float:
		active = [phase.overhead for phase in self.phases if not phase.skipped]
		return float(np.mean(active)) if active else 0.0

	def per_phase(self) -> list[dict]:
		return [
			dict(
				phase=phase.index,
				nodes=len(phase.node_ids),
				skipped=phase.skipped,
				count=phase.overhead,
				bytes=phase.ledger.bytes(),
				dyn_g=phase.ledger.count(Phase.DYN_G),
				cloud=phase.cloud_overhead,
				gain=phase.gain
			)
			for phase in self.phases
		]

	def evaluate(self, test: SamplePool, run: int = 0, report: MetricsReport = None, **keys) -> MetricsReport:
		report = report if report is not None else MetricsReport()
		for phase in self.phases:
			if phase.aggregate is None:
				continue
			scores = evaluate(phase.aggregate.predict(test.X), test.y, test.num_classes)
			report.add_scores(run, self.procedure, G_ID, "m", scores, phase=phase.index, **keys)
		return report


def _aggregate(models: Sequence[LinearModel]) -> OvaClassifier:
	return OvaClassifier(models=tuple(models), labels=tuple(range(1, len(models) + 1)))


def _merge(current: Optional[OvaClassifier], update: list[LinearModel], alpha: float) -> OvaClassifier:
	if current is None:
		return _aggregate(update)
	return _aggregate([ema_merge(m, u, alpha) for m, u in zip(current.models, update)])


def _gtl_phase(batch, aggregate, config, bus) -> list[LinearModel]:
	nodes = make_nodes(batch)
	ids = [node.location_id for node in nodes]
	k = nodes[0].data.num_classes
	extra = None
	if aggregate is not None:
		for dst in ids:
			for label, model in zip(aggregate.labels, aggregate.models):
				transmit(bus, Phase.DYN_G, G_ID, dst, model, class_label=label, owner=G_ID)
		copies = [group_by_class(collect(bus, dst, Phase.DYN_G, k)) for dst in ids]
		extra = {label: copies[0][label][G_ID] for label in aggregate.labels}

	result = gtl_round(nodes, config, bus, ids, "dyn_gtl", extra_sources=extra)
	reporter = result.nodes[0]
	update = [
		flatten(model, sources)
		for model, sources in zip(reporter.h4.models, reporter.h4.sources)
	]
	for label, model in enumerate(update, start=1):
		transmit(bus, Phase.DYN_G, reporter.location_id, G_ID, model, class_label=label)
	received = group_by_class(collect(bus, G_ID, Phase.DYN_G, k))
	return [received[label][reporter.location_id] for label in range(1, k + 1)]


def _nohtl_phase(batch, aggregate, alpha, config, bus) -> OvaClassifier:
	nodes = make_nodes(batch)
	ids = [node.location_id for node in nodes]
	k = nodes[0].data.num_classes
	train_local(nodes, config)
	for node in nodes:
		for label, model in enumerate(node.h0.models, start=1):
			transmit(bus, Phase.COLLECTOR_UP, node.location_id, G_ID, model, class_label=label)
	received = group_by_class(collect(bus, G_ID, Phase.COLLECTOR_UP, len(ids) * k))
	update = [
		consensus_mean([received[label][owner] for owner in ids])
		for label in range(1, k + 1)
	]
	merged = _merge(aggregate, update, alpha)
	for node in nodes:
		for label, model in zip(merged.labels, merged.models):
			transmit(bus, Phase.COLLECTOR_DOWN, G_ID, node.location_id, model, class_label=label)
		models = group_by_class(collect(bus, node.location_id, Phase.COLLECTOR_DOWN, k))
		node.fill("h4", _aggregate([models[label][G_ID] for label in merged.labels]))
	return merged


def run_dynamic(
		stream: Sequence[Sequence[LocalDataset]],
		dynamic: DynamicConfig = None,
		protocol: ProtocolConfig = None,
		bus: Bus = None,
		encoding: EncodingConfig = None
) -> DynamicResult:
	"""
	Runs one learning phase per arrival batch. In `dyn_gtl` G sends m
	to the newcomers, which use it as an extra source, and the lowest
	newcomer returns the flattened mean transfer model m'. In `dyn_nohtl`
	the newcomers upload their local models to G, which averages them
	into m' and sends the merged m back. Empty batches are skipped.

	:param stream: Arrival batches, in order.
	:raises - ConfigurationError: For a static procedure or location
		ids that repeat across the stream or collide with G.
	"""
	dynamic = dynamic or DynamicConfig()
	protocol = protocol or ProtocolConfig(procedure="dyn_gtl")
	if protocol.procedure not in ("dyn_gtl", "dyn_nohtl"):
		raise ConfigurationError(f"Procedure {protocol.procedure} is not a dynamic procedure.")
	ids = [ds.location_id for batch in stream for ds in batch]
	if len(set(ids)) != len(ids) or G_ID in ids:
		raise ConfigurationError(f"Location ids must be unique across the stream and differ from {G_ID}.")

	config = protocol.model_copy(update={
		"aggregation": ("mean",),
		"greedy": protocol.greedy.model_copy(update={"source_clip": dynamic.source_clip})
	})
	bus = bus or Bus([G_ID], encoding)
	bus.add_node(G_ID)
	aggregate: Optional[OvaClassifier] = None
	phases: list[DynamicPhase] = []

	for index, batch in enumerate(stream):
		mark = bus.ledger.mark()
		if not batch:
			logger.info("Phase %d has no arrivals, skipping it", index)
			phases.append(DynamicPhase(index, (), aggregate, bus.ledger.since(mark), skipped=True))
			continue
		for ds in batch:
			bus.add_node(ds.location_id)
		if protocol.procedure == "dyn_gtl":
			update = _gtl_phase(batch, aggregate, config, bus)
			aggregate = _merge(aggregate, update, dynamic.alpha)
		else:
			aggregate = _nohtl_phase(batch, aggregate, dynamic.alpha, config, bus)
		phases.append(DynamicPhase(
			index=index,
			node_ids=tuple(sorted(ds.location_id for ds in batch)),
			aggregate=aggregate,
			ledger=bus.ledger.since(mark),
			num_samples=sum(ds.n_l for ds in batch),
			dim=batch[0].dim
		))
		logger.info("Phase %d merged %d newcomers", index, len(batch))

	return DynamicResult(
		procedure=protocol.procedure,
		phases=phases,
		ledger=bus.ledger,
		alpha=dynamic.alpha
	)
