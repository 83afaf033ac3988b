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
from edgehtl.errors import (
	EdgeHTLError,
	InvalidUsageError,
	InvalidArgsError,
	ConfigurationError,

	DataError,
	DataFormatError,
	DataDimensionError,
	PartitionError,

	LearnError,
	NumericError,
	FeatureSpaceError,
	ModelRecordError,

	MulticlassError,
	MixedFeatureSpaceError,

	NetsimError,
	RoutingError,
	NodeOfflineError,
	EgressViolationError,

	MetricsError,
	UndefinedMetricError,

	ProtocolError,

	ExperimentError,
	ExperimentConfigError
)


def test_error_instantiation():
	assert EdgeHTLError()
	assert InvalidUsageError()
	assert InvalidArgsError()
	assert ConfigurationError()

	assert DataError()
	assert DataFormatError("train-images-idx3-ubyte", "bad magic")
	assert DataDimensionError((28, 28), (27, 28))
	assert PartitionError(3, 10, 2)

	assert LearnError()
	assert NumericError("weights")
	assert FeatureSpaceError("raw:5", "raw:4")
	assert ModelRecordError("missing payload")

	assert MulticlassError()
	assert MixedFeatureSpaceError(["raw:5", "gtl:5+2"])

	assert NetsimError()
	assert RoutingError(1, 2)
	assert NodeOfflineError(4)
	assert EgressViolationError("step1")

	assert MetricsError()
	assert UndefinedMetricError("recall")

	assert ProtocolError("step3", "barrier broken")

	assert ExperimentError()
	assert ExperimentConfigError("bad ratio")


@pytest.mark.parametrize("error", [
	DataError(), LearnError(), MulticlassError(), NetsimError(),
	MetricsError(), ProtocolError(), ExperimentError()
])
def test_package_errors_share_the_root(error: Exception):
	assert isinstance(error, EdgeHTLError)


def test_configuration_errors():
	assert isinstance(PartitionError(3, 10, 2), ConfigurationError)
	assert isinstance(ExperimentConfigError(), ConfigurationError)
	assert not isinstance(ProtocolError(), ConfigurationError)


def test_error_messages_name_their_subject():
	assert "train-images-idx3-ubyte" in str(DataFormatError("/tmp/train-images-idx3-ubyte"))
	assert "Class 7" in str(PartitionError(7, 10, 3))
	assert "step1" in str(ProtocolError("step1", "bus down"))
	assert "node 4" in str(NodeOfflineError(4)).lower()
