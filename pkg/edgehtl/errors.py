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
from .internal.errors import (
	EdgeHTLError,
	InvalidUsageError,
	InvalidArgsError,
	ConfigurationError
)
from .internal.data.errors import (
	DataError,
	DataFormatError,
	DataDimensionError,
	PartitionError
)
from .internal.learn.errors import (
	LearnError,
	NumericError,
	FeatureSpaceError,
	ModelRecordError
)
from .internal.multiclass.errors import (
	MulticlassError,
	MixedFeatureSpaceError
)
from .internal.netsim.errors import (
	NetsimError,
	RoutingError,
	NodeOfflineError,
	EgressViolationError
)
from .internal.metrics.errors import (
	MetricsError,
	UndefinedMetricError
)
from .internal.proto.errors import (
	ProtocolError
)
from .internal.experiment.errors import (
	ExperimentError,
	ExperimentConfigError
)


__all__ = [
	"EdgeHTLError",
	"InvalidUsageError",
	"InvalidArgsError",
	"ConfigurationError",
	"DataError",
	"DataFormatError",
	"DataDimensionError",
	"PartitionError",
	"LearnError",
	"NumericError",
	"FeatureSpaceError",
	"ModelRecordError",
	"MulticlassError",
	"MixedFeatureSpaceError",
	"NetsimError",
	"RoutingError",
	"NodeOfflineError",
	"EgressViolationError",
	"MetricsError",
	"UndefinedMetricError",
	"ProtocolError",
	"ExperimentError",
	"ExperimentConfigError"
]
