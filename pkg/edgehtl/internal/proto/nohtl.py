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
from typing import Sequence
from ..data.common import LocalDataset
from ..learn.common import LinearModel
from ..multiclass.ova import OvaClassifier
from ..multiclass.aggregate import MajorityEnsemble, consensus_ova
from ..netsim.bus import Bus
from ..netsim.common import Phase
from ..errors import ConfigurationError
from .common import (
	Node, ProtocolConfig, ProtocolResult, Tamper, apply_tamper,
	collect, group_by_class, make_nodes, train_local, transmit
)
from . import errors


__all__ = ["run_nohtl", "run_nohtl_mu", "run_nohtl_mv"]


logger = logging.getLogger(__name__)


def _collector(ids: Sequence[int], config: ProtocolConfig) -> int:
	if config.collector_id is None:
		return ids[0]
	if config.collector_id not in ids:
		raise ConfigurationError(f"Collector {config.collector_id} is not one of the locations.")
	return config.collector_id


def _classifiers(received: dict[int, dict[int, LinearModel]], labels: tuple[int, ...]) -> dict[int, OvaClassifier]:
	owners = sorted({owner for models in received.values() for owner in models})
	return {
		owner: OvaClassifier(models=tuple(received[label][owner] for label in labels), labels=labels)
		for owner in owners
	}


def run_nohtl_mu(nodes: list[Node], config: ProtocolConfig, bus: Bus, tamper: Tamper = None) -> ProtocolResult:
	"""
	Consensus over a star: every node uploads its local models to the
	collector, which averages them and sends the mean back.

	:raises - errors.ProtocolError: If the collector is offline.
	"""
	by_id = {node.location_id: node for node in nodes}
	ids = sorted(by_id)
	labels = tuple(range(1, nodes[0].data.num_classes + 1))
	collector = _collector(ids, config)
	train_local(nodes, config)

	for src in ids:
		if src == collector:
			continue
		for label, model in zip(labels, by_id[src].h0.models):
			outgoing = apply_tamper(tamper, src, Phase.COLLECTOR_UP, label, model)
			transmit(bus, Phase.COLLECTOR_UP, src, collector, outgoing, class_label=label)

	received = group_by_class(collect(bus, collector, Phase.COLLECTOR_UP, (len(ids) - 1) * len(labels)))
	members = {**_classifiers(received, labels), collector: by_id[collector].h0}
	mean = consensus_ova([members[owner] for owner in sorted(members)])
	by_id[collector].fill("h4", mean)

	for dst in ids:
		if dst == collector:
			continue
		for label, model in zip(labels, mean.models):
			transmit(bus, Phase.COLLECTOR_DOWN, collector, dst, model, class_label=label)
	for dst in ids:
		if dst == collector:
			continue
		models = group_by_class(collect(bus, dst, Phase.COLLECTOR_DOWN, len(labels)))
		by_id[dst].fill("h4", OvaClassifier(
			models=tuple(models[label][collector] for label in labels),
			labels=labels
		))

	return ProtocolResult(
		procedure="nohtl_mu",
		predictors={
			"h0": {i: by_id[i].h0 for i in ids},
			"h4_mean": {i: by_id[i].h4 for i in ids}
		},
		ledger=bus.ledger,
		nodes=[by_id[i] for i in ids],
		aggregators=(collector,)
	)


def run_nohtl_mv(nodes: list[Node], config: ProtocolConfig, bus: Bus, tamper: Tamper = None) -> ProtocolResult:
	"""
	Majority voting: every node sends its local models to every other
	node and predicts by the vote of all local classifiers.
	"""
	by_id = {node.location_id: node for node in nodes}
	ids = sorted(by_id)
	labels = tuple(range(1, nodes[0].data.num_classes + 1))
	train_local(nodes, config)

	for src in ids:
		for dst in ids:
			if dst == src:
				continue
			for label, model in zip(labels, by_id[src].h0.models):
				outgoing = apply_tamper(tamper, src, Phase.STEP1, label, model)
				transmit(bus, Phase.STEP1, src, dst, outgoing, class_label=label)

	for node_id in ids:
		received = group_by_class(collect(bus, node_id, Phase.STEP1, (len(ids) - 1) * len(labels)))
		members = {**_classifiers(received, labels), node_id: by_id[node_id].h0}
		by_id[node_id].fill("h4", MajorityEnsemble(members=tuple(members[o] for o in sorted(members))))

	return ProtocolResult(
		procedure="nohtl_mv",
		predictors={
			"h0": {i: by_id[i].h0 for i in ids},
			"h4_majority": {i: by_id[i].h4 for i in ids}
		},
		ledger=bus.ledger,
		nodes=[by_id[i] for i in ids]
	)


def run_nohtl(
		datasets: Sequence[LocalDataset],
		config: ProtocolConfig = None,
		bus: Bus = None,
		tamper: Tamper = None
) -> ProtocolResult:
	"""
	Runs the procedure without transfer learning named by
	`config.procedure`, consensus averaging by default.

	:raises - errors.ProtocolError: On a bus failure, with the phase tag.
	:raises - ConfigurationError: On fewer than two locations or an
		unknown collector.
	"""
	config = config or ProtocolConfig(procedure="nohtl_mu")
	if len(datasets) < 2:
		raise ConfigurationError("Distributed learning needs at least two locations.")
	nodes = make_nodes(datasets)
	bus = bus or Bus([node.location_id for node in nodes])
	match config.procedure:
		case "nohtl_mu":
			result = run_nohtl_mu(nodes, config, bus, tamper)
		case "nohtl_mv":
			result = run_nohtl_mv(nodes, config, bus, tamper)
		case other:
			raise errors.ProtocolError("setup", f"{other} is not a procedure without transfer learning")
	logger.info("Finished %s over %d nodes, %d coefficients metered", result.procedure, len(nodes), bus.ledger.count())
	return result
