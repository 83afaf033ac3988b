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
from typing import Mapping, Sequence
from ..data.common import LocalDataset
from ..learn.common import LinearModel, SourceSet
from ..learn.greedytl import greedy_tl
from ..multiclass.ova import OvaClassifier
from ..multiclass.aggregate import MajorityEnsemble, consensus_ova
from ..netsim.bus import Bus
from ..netsim.common import Phase
from ..errors import ConfigurationError
from .. import utils
from .common import (
	STAGE_GTL, STAGE_SELECT, Node, ProtocolConfig,
	ProtocolResult, Tamper, apply_tamper, collect, group_by_class,
	make_nodes, train_local, transmit
)
from . import errors


__all__ = ["EXTRA_OWNER", "run_gtl", "run_gtl_limited", "select_aggregators", "gtl_round"]


logger = logging.getLogger(__name__)

EXTRA_OWNER = -1


def select_aggregators(ids: Sequence[int], config: ProtocolConfig) -> tuple[int, ...]:
	"""
	:raises - ConfigurationError: Unless 1 <= num_aggregators <= s.
	"""
	count = len(ids) if config.num_aggregators is None else config.num_aggregators
	if not 1 <= count <= len(ids):
		raise ConfigurationError(
			f"The number of aggregators must lie in 1..{len(ids)}, got {count}."
		)
	ids = sorted(ids)
	if config.aggregator_selection == "random":
		rng = utils.derive_rng(config.seed, STAGE_SELECT)
		return tuple(sorted(int(i) for i in rng.choice(ids, size=count, replace=False)))
	return tuple(ids[:count])


def gtl_round(
		nodes: Sequence[Node],
		config: ProtocolConfig,
		bus: Bus,
		aggregators: Sequence[int],
		procedure: str = "gtl",
		extra_sources: Mapping[int, LinearModel] = None,
		tamper: Tamper = None
) -> ProtocolResult:
	"""
	Runs Steps 0 to 4 of the transfer-learning procedure over the bus.
	Every node sends its local models to the aggregators, which retrain
	with GreedyTL, exchange the transfer models among themselves and
	aggregate them. When some nodes do not aggregate, the first aggregator
	hands its mean model back to them together with the source models
	it references.

	:param extra_sources: Optional per-class model joining every source
		set after the location models, under the owner id -1.
	:raises - errors.ProtocolError: On a bus failure or a broken barrier.
	"""
	by_id = {node.location_id: node for node in nodes}
	ids = sorted(by_id)
	aggregators = tuple(sorted(aggregators))
	labels = tuple(range(1, nodes[0].data.num_classes + 1))
	train_local(nodes, config)

	# Step 1
	for src in ids:
		h0 = by_id[src].h0
		for dst in aggregators:
			if dst == src:
				continue
			for label, model in zip(labels, h0.models):
				outgoing = apply_tamper(tamper, src, Phase.STEP1, label, model)
				transmit(bus, Phase.STEP1, src, dst, outgoing, class_label=label)

	# Step 2, behind the Step 1 barrier
	def retrain(agg_id: int) -> OvaClassifier:
		node = by_id[agg_id]
		received = group_by_class(collect(bus, agg_id, Phase.STEP1, (len(ids) - 1) * len(labels)))
		models, source_sets = [], []
		for label, own in zip(labels, node.h0.models):
			mapping = {**received.get(label, {}), agg_id: own}
			sources = SourceSet.from_mapping(mapping)
			if extra_sources is not None:
				sources = sources.with_extra(extra_sources[label], EXTRA_OWNER)
			greedy = config.greedy.model_copy(update={
				"seed": utils.derive_seed(config.seed, STAGE_GTL, agg_id, label)
			})
			models.append(greedy_tl(node.data.X, node.data.binary_targets(label), sources, greedy))
			source_sets.append(sources)
		node.sources = dict(zip(labels, source_sets))
		return OvaClassifier(models=tuple(models), labels=labels, sources=tuple(source_sets))

	retrained = utils.run_parallel(retrain, aggregators, config.workers)
	for agg_id, clf in zip(aggregators, retrained):
		by_id[agg_id].fill("h2", clf)

	# Step 3
	for src in aggregators:
		h2 = by_id[src].h2
		for dst in aggregators:
			if dst == src:
				continue
			for label, model in zip(labels, h2.models):
				outgoing = apply_tamper(tamper, src, Phase.STEP3, label, model)
				transmit(bus, Phase.STEP3, src, dst, outgoing, class_label=label)

	# Step 4
	means: dict[int, OvaClassifier] = {}
	majorities: dict[int, MajorityEnsemble] = {}
	want_mean = "mean" in config.aggregation or len(aggregators) < len(ids)
	for agg_id in aggregators:
		node = by_id[agg_id]
		received = group_by_class(collect(bus, agg_id, Phase.STEP3, (len(aggregators) - 1) * len(labels)))
		per_owner: dict[int, list[LinearModel]] = {agg_id: list(node.h2.models)}
		for label in labels:
			for owner, model in received.get(label, {}).items():
				per_owner.setdefault(owner, []).append(model)
		classifiers = [
			OvaClassifier(models=tuple(per_owner[owner]), labels=labels, sources=node.h2.sources)
			for owner in sorted(per_owner)
		]
		if want_mean:
			means[agg_id] = consensus_ova(classifiers, sources=node.h2.sources)
		if "majority" in config.aggregation:
			majorities[agg_id] = MajorityEnsemble(members=tuple(classifiers))
		node.fill("h4", means.get(agg_id, majorities.get(agg_id)))

	others = [i for i in ids if i not in aggregators]
	if others:
		_hand_back(by_id, others, aggregators[0], means[aggregators[0]], bus, extra_sources)
		for node_id in others:
			means[node_id] = by_id[node_id].h4

	predictors = {
		"h0": {i: by_id[i].h0 for i in ids},
		"h2": {i: by_id[i].h2 for i in aggregators}
	}
	if "mean" in config.aggregation or others:
		predictors["h4_mean"] = means
	if majorities:
		predictors["h4_majority"] = majorities
	logger.info(
		"Finished %s round over %d nodes with %d aggregators, %d coefficients metered",
		procedure, len(ids), len(aggregators), bus.ledger.count()
	)
	return ProtocolResult(
		procedure=procedure,
		predictors=predictors,
		ledger=bus.ledger,
		nodes=[by_id[i] for i in ids],
		aggregators=aggregators
	)


def _hand_back(
		by_id: dict[int, Node],
		others: Sequence[int],
		sender: int,
		mean: OvaClassifier,
		bus: Bus,
		extra_sources: Mapping[int, LinearModel] = None
) -> None:
	"""
	Sends the mean transfer model and every source model with a
	non-null weight to the nodes that did not aggregate. Receivers
	rebuild the source sets with their own local model and zero
	placeholders for the sources that carry no weight.
	"""
	eps = bus.encoding.eps_zero
	phase = Phase.COLLECTOR_DOWN
	for dst in others:
		for label, model, sources in zip(mean.labels, mean.models, mean.sources):
			transmit(bus, phase, sender, dst, model, class_label=label)
			for beta, owner, source in zip(model.betas, sources.owners, sources.models):
				if abs(beta) > eps and owner != dst:
					transmit(bus, phase, sender, dst, source, class_label=label, owner=owner)

	for dst in others:
		node = by_id[dst]
		received = bus.receive(dst, phase)
		aggregate: dict[int, LinearModel] = {}
		referenced: dict[int, dict[int, LinearModel]] = {}
		for message in received:
			model = message.model()
			if model.num_sources:
				aggregate[message.class_label] = model
			else:
				referenced.setdefault(message.class_label, {})[message.owner] = model
		if len(aggregate) != len(mean.labels):
			raise errors.ProtocolError(phase.value, f"node {dst} received {len(aggregate)} of {len(mean.labels)} models")

		zero = LinearModel.from_parts(np.zeros(node.data.dim), 0.0)
		models, source_sets = [], []
		for label, own in zip(mean.labels, node.h0.models):
			known = referenced.get(label, {})
			mapping = {owner: known.get(owner, zero) for owner in by_id}
			mapping[dst] = own
			sources = SourceSet.from_mapping(mapping)
			if extra_sources is not None:
				sources = sources.with_extra(known.get(EXTRA_OWNER, zero), EXTRA_OWNER)
			models.append(aggregate[label])
			source_sets.append(sources)
		node.sources = dict(zip(mean.labels, source_sets))
		node.fill("h4", OvaClassifier(models=tuple(models), labels=mean.labels, sources=tuple(source_sets)))


def _checked_nodes(datasets: Sequence[LocalDataset]) -> list[Node]:
	if len(datasets) < 2:
		raise ConfigurationError("Distributed learning needs at least two locations.")
	return make_nodes(datasets)


def run_gtl(
		datasets: Sequence[LocalDataset],
		config: ProtocolConfig = None,
		bus: Bus = None,
		tamper: Tamper = None
) -> ProtocolResult:
	"""
	Transfer-learning procedure where every location aggregates.

	:param datasets: Local datasets of at least two locations.
	:param config: Protocol settings, optional.
	:param bus: Bus to meter the run on, a fresh one by default.
	:param tamper: Hook that may corrupt outgoing models.
	:return: The per-step predictors and the overhead ledger.
	"""
	config = config or ProtocolConfig()
	nodes = _checked_nodes(datasets)
	ids = [node.location_id for node in nodes]
	bus = bus or Bus(ids)
	return gtl_round(nodes, config, bus, ids, "gtl", tamper=tamper)


def run_gtl_limited(
		datasets: Sequence[LocalDataset],
		config: ProtocolConfig,
		bus: Bus = None,
		tamper: Tamper = None
) -> ProtocolResult:
	"""
	Transfer-learning procedure where only `config.num_aggregators`
	locations receive the local models and retrain.

	:raises - ConfigurationError: If the aggregator count is out of range.
	"""
	nodes = _checked_nodes(datasets)
	ids = [node.location_id for node in nodes]
	aggregators = select_aggregators(ids, config)
	bus = bus or Bus(ids)
	return gtl_round(nodes, config, bus, aggregators, "gtl_limited", tamper=tamper)
