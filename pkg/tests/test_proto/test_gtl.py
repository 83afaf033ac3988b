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
import pytest
import numpy as np
from dotmap import DotMap
from edgehtl.errors import ConfigurationError, ProtocolError
from edgehtl.data import PartitionSpec, holdout, partition, synth_blobs
from edgehtl.netsim import Bus, Phase, overhead_bound, reconcile
from edgehtl.proto import (
	Node,
	ProtocolConfig,
	run_gtl,
	run_gtl_limited,
	run_protocol
)


def _limited(config: ProtocolConfig, count: int, **changes) -> ProtocolConfig:
	return config.model_copy(update={"procedure": "gtl_limited", "num_aggregators": count, **changes})


def test_gtl_steps_and_traffic(blobs: DotMap, fast_protocol: ProtocolConfig):
	result = run_gtl(blobs.datasets, fast_protocol)
	s, k = len(blobs.datasets), blobs.k

	assert result.procedure == "gtl"
	assert sorted(result.predictors) == ["h0", "h2", "h4_majority", "h4_mean"]
	assert all(len(by_location) == s for by_location in result.predictors.values())
	assert result.aggregators == (0, 1, 2)
	assert result.num_locations == s
	assert result.num_classes == k

	ledger = result.ledger
	assert ledger.messages(Phase.STEP1) == s * (s - 1) * k
	assert ledger.messages(Phase.STEP3) == s * (s - 1) * k
	assert ledger.messages(Phase.COLLECTOR_DOWN) == 0
	assert ledger.count(Phase.STEP1) == s * (s - 1) * k * (blobs.d + 1)
	assert all(row["exact"] for row in reconcile(ledger, "gtl", s, k))

	for node in result.nodes:
		assert node.h2.sources is not None
		assert all(len(sources) == s for sources in node.h2.sources)
		assert node.sources[1].owners == (0, 1, 2)


def test_gtl_does_not_hurt_homogeneous_nodes(fast_protocol: ProtocolConfig):
	pool = synth_blobs(k=3, d=5, per_class=100, separation=6.0, seed=21)
	split = holdout(pool, ratio=0.3, seed=2)
	datasets = partition(split.train, PartitionSpec(num_locations=2, seed=4))
	result = run_gtl(datasets, fast_protocol)

	frame = result.evaluate(split.test).to_frame()
	f_scores = frame[frame["metric"] == "f_measure"].groupby("step")["value"].mean()
	assert f_scores["h4_mean"] >= f_scores["h0"] - 0.02


def test_gtl_is_deterministic(blobs: DotMap, fast_protocol: ProtocolConfig):
	first = run_gtl(blobs.datasets, fast_protocol)
	second = run_gtl(blobs.datasets, fast_protocol)
	for location, predictor in first.predictors["h4_mean"].items():
		other = second.predictors["h4_mean"][location]
		for a, b in zip(predictor.models, other.models):
			assert np.array_equal(a.coefficients, b.coefficients)


def test_limited_with_all_aggregators_equals_gtl(blobs: DotMap, fast_protocol: ProtocolConfig):
	full = run_gtl(blobs.datasets, fast_protocol)
	limited = run_gtl_limited(blobs.datasets, _limited(fast_protocol, len(blobs.datasets)))
	test = blobs.split.test.X
	for step in ("h2", "h4_mean", "h4_majority"):
		for location, predictor in full.predictors[step].items():
			assert np.array_equal(predictor.predict(test), limited.predictors[step][location].predict(test))
	assert limited.ledger.count() == full.ledger.count()


def test_single_aggregator_is_star_shaped(blobs: DotMap, fast_protocol: ProtocolConfig):
	result = run_gtl_limited(blobs.datasets, _limited(fast_protocol, 1))
	s, k = len(blobs.datasets), blobs.k

	assert result.aggregators == (0,)
	assert list(result.predictors["h2"]) == [0]
	assert sorted(result.predictors["h4_mean"]) == [0, 1, 2]
	assert result.ledger.messages(Phase.STEP1) == (s - 1) * k
	assert result.ledger.messages(Phase.STEP3) == 0
	assert result.ledger.messages(Phase.COLLECTOR_DOWN) >= (s - 1) * k
	assert all(row["exact"] for row in reconcile(result.ledger, "gtl_limited", s, k, aggregators=1))

	test = blobs.split.test.X
	expected = result.predictors["h4_mean"][0].predict(test)
	for location in (1, 2):
		assert np.array_equal(result.predictors["h4_mean"][location].predict(test), expected)


def test_random_aggregator_selection(blobs: DotMap, fast_protocol: ProtocolConfig):
	config = _limited(fast_protocol, 2, aggregator_selection="random")
	first = run_gtl_limited(blobs.datasets, config)
	second = run_gtl_limited(blobs.datasets, config)
	assert len(first.aggregators) == 2
	assert first.aggregators == second.aggregators


@pytest.mark.parametrize("count", [0, 4])
def test_aggregator_count_bounds(blobs: DotMap, fast_protocol: ProtocolConfig, count: int):
	with pytest.raises(ConfigurationError):
		run_gtl_limited(blobs.datasets, _limited(fast_protocol, count))


def test_offline_aggregator_fails_with_phase(blobs: DotMap, fast_protocol: ProtocolConfig):
	bus = Bus([0, 1, 2])
	bus.set_offline(2)
	with pytest.raises(ProtocolError, match="step1"):
		run_gtl(blobs.datasets, fast_protocol, bus)


def test_setup_errors(blobs: DotMap, fast_protocol: ProtocolConfig):
	with pytest.raises(ConfigurationError):
		run_gtl(blobs.datasets[:1], fast_protocol)
	with pytest.raises(ConfigurationError):
		run_gtl([blobs.datasets[0], blobs.datasets[0]], fast_protocol)
	with pytest.raises(ConfigurationError):
		run_protocol(blobs.datasets, fast_protocol.model_copy(update={"procedure": "dyn_gtl"}))


def test_node_slots_fill_in_order(blobs: DotMap):
	node = Node(location_id=0, data=blobs.datasets[0])
	with pytest.raises(ProtocolError):
		node.fill("h2", object())
	node.fill("h0", object())
	with pytest.raises(ProtocolError):
		node.fill("h0", object())
	with pytest.raises(ProtocolError):
		node.fill("h7", object())
	node.fill("h4", object())
	assert node.h4 is not None


def test_evaluate_adds_gains(blobs: DotMap, fast_protocol: ProtocolConfig):
	result = run_protocol(blobs.datasets, fast_protocol)
	frame = result.evaluate(blobs.split.test, run=3, seed=9).to_frame()
	assert set(frame["run"]) == {3}
	assert set(frame["seed"]) == {9}
	gains = frame[frame["metric"] == "ppg"]
	assert set(gains["step"]) == {"h2", "h4_mean", "h4_majority"}
	assert len(gains) == 3 * len(blobs.datasets)


@pytest.mark.parametrize("seed", range(50))
def test_total_traffic_respects_the_bound(seed: int, fast_protocol: ProtocolConfig):
	rng = np.random.default_rng(seed)
	s, k, kappa = (int(v) for v in (rng.integers(2, 6), rng.integers(2, 5), rng.integers(1, 7)))
	pool = synth_blobs(k=k, d=6, per_class=40, separation=3.0, seed=seed)
	datasets = partition(pool, PartitionSpec(num_locations=s, seed=seed))
	greedy = fast_protocol.greedy.model_copy(update={"bag_count": 1, "kappa": kappa})
	config = fast_protocol.model_copy(update={"seed": seed, "greedy": greedy})
	ledger = run_gtl(datasets, config).ledger

	d0, d1 = ledger.mean_count(Phase.STEP1), ledger.mean_count(Phase.STEP3)
	assert d1 <= d0
	assert ledger.count() <= overhead_bound(s, k, d0)


def _mean_f(result, test) -> float:
	frame = result.evaluate(test).to_frame()
	return frame.query("step == 'h4_mean' and metric == 'f_measure'")["value"].mean()


def test_few_aggregators_suffice(fast_protocol: ProtocolConfig):
	pool = synth_blobs(k=3, d=5, per_class=120, separation=4.0, seed=5)
	split = holdout(pool, ratio=0.25, seed=1)
	spec = PartitionSpec(
		regime="class_unbalance", num_locations=8,
		depleted_classes=(2,), keep_fraction=0.2, seed=2
	)
	datasets = partition(split.train, spec)

	full = _mean_f(run_gtl(datasets, fast_protocol), split.test)
	few = _mean_f(run_gtl_limited(datasets, _limited(fast_protocol, 2)), split.test)
	assert few == pytest.approx(full, abs=0.02)
