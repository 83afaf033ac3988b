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
from ..errors import EdgeHTLError


__all__ = ["MetricsError", "UndefinedMetricError"]


class MetricsError(EdgeHTLError):
	"""Base class for all Metrics errors."""


class UndefinedMetricError(MetricsError):
	def __init__(self, metric: str = "metric", reason: str = "no samples to evaluate"):
		super().__init__(f"The {metric} is undefined: {reason}.")
