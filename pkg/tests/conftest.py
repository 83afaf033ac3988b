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
from edgehtl.data import PartitionSpec, holdout, partition, synth_blobs
from edgehtl.learn import GreedyTLConfig, SvmConfig
from edgehtl.proto import ProtocolConfig


@pytest.fixture(name="blobs", scope="session")
def fixture_blobs() -> DotMap:
	pool = synth_blobs(k=3, d=5, per_class=80, separation=4.0, seed=7)
	split = holdout(pool, ratio=0.25, seed=3)
	datasets = partition(split.train, PartitionSpec(regime="balanced", num_locations=3, seed=1))
	return DotMap(pool=pool, split=split, datasets=datasets, k=3, d=5, _dynamic=False)


@pytest.fixture(name="fast_protocol", scope="session")
def fixture_fast_protocol() -> ProtocolConfig:
	return ProtocolConfig(
		svm=SvmConfig(max_epochs=50),
		greedy=GreedyTLConfig(kappa=6, bag_size=20, bag_count=2),
		seed=11
	)


@pytest.fixture(name="rng")
def fixture_rng() -> np.random.Generator:
	return np.random.default_rng(1234)
