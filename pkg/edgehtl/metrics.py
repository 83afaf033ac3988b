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
from .internal.metrics.scores import (
	precision,
	recall,
	f_measure,
	ppg,
	per_class_accuracy,
	evaluate
)
from .internal.metrics.report import (
	METRIC_COLUMNS,
	confidence_interval,
	MetricsReport
)


__all__ = [
	"precision",
	"recall",
	"f_measure",
	"ppg",
	"per_class_accuracy",
	"evaluate",
	"METRIC_COLUMNS",
	"confidence_interval",
	"MetricsReport"
]
